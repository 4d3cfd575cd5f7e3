#include "catch_amalgamated.hpp"
#include "hurwitz/combinatorics.hpp"

#include <map>

using namespace hurwitz;

TEST_CASE("partitions_of enumerates in reverse lexicographic order") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(5, 2) == std::vector<Partition>{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
  // brute-force partition counts p(n)
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  auto list = partitions_of(8);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(reverse_lex_less(list[i - 1], list[i]));
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("partition invariants") {
  Partition p{1, 3, 3};
  CHECK(p.parts()[0] == 3);
  CHECK(p.weight() == 7);
  CHECK(p.length() == 3);
  CHECK(to_string(p) == "(3,3,1)");
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("automorphisms and class sizes") {
  CHECK(aut_order(Partition{4, 3, 3, 1, 1, 1}) == 12);
  CHECK(aut_order(Partition{5}) == 1);
  CHECK(aut_order(Partition{1, 1, 1}) == 6);
  CHECK(class_size(Partition{1, 1}) == 1);
  CHECK(class_size(Partition{2}) == 1);
  CHECK(class_size(Partition{2, 1}) == 3);

  for (int K = 1; K <= 8; ++K) {
    BigInt total = 0, kfact = 1;
    for (int i = 2; i <= K; ++i) kfact *= i;
    for (const auto& lambda : partitions_of(K)) {
      total += class_size(lambda);
      std::map<int, int> mult;
      for (int x : lambda.parts()) ++mult[x];
      BigInt z = 1;
      for (auto [i, m] : mult)
        for (int j = 1; j <= m; ++j) z *= i * j;
      CHECK(kfact / class_size(lambda) == z);
      CHECK(centralizer_order(lambda) == z);
    }
    CHECK(total == kfact);
  }
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binomial(-1, 0) == 1);
  CHECK(gen_binomial(-1, 2) == 1);
  CHECK(gen_binomial(3, 2) == 3);
  CHECK(gen_binomial(-1, 1) == -1);
  CHECK(gen_binomial(-2, 3) == -4);
  // Pascal's triangle
  std::vector<std::vector<long>> pascal(12);
  for (int n = 0; n < 12; ++n) {
    pascal[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k < n; ++k)
      pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
  }
  for (int a = 0; a < 12; ++a)
    for (int d = 0; d <= a; ++d) CHECK(gen_binomial(a, d) == pascal[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)]);
  CHECK(gen_binomial(3, 5) == 0);
  CHECK_THROWS_AS(gen_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("multinomials and compositions") {
  CHECK(multinomial(std::vector<int>{0, 0, 0}) == 1);
  CHECK(multinomial(std::vector<int>{1, 1}) == 2);
  CHECK(multinomial(std::vector<int>{2, 1}) == 3);
  CHECK(multinomial(std::vector<int>{}) == 1);
  CHECK(compositions(4, 2) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(compositions(0, 0).size() == 1);
  CHECK(compositions(2, 3).empty());
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) CHECK(Rational(static_cast<long>(compositions(n, k).size())) == gen_binomial(n - 1, k - 1));
}

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(7)) == "7/1");
  CHECK(to_string(ratio(-10, 6)) == "-5/3");
  CHECK(parse_rational("-5/3") == ratio(-5, 3));
  CHECK(parse_rational("4/2") == 2);
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(rational_pow(2, -3) == ratio(1, 8));
}
