#include "catch_amalgamated.hpp"
#include "hurwitz/classical.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/symmetric_group.hpp"

using namespace hurwitz;

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_character(Partition{2}, Partition{2}) == 1);
  CHECK(mn_character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{3, 3}, Partition{1, 1, 1, 1, 1, 1}) == 5);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("character orthogonality") {
  for (int K = 1; K <= 6; ++K) {
    const CharTable table(K);
    const auto& parts = table.partitions();
    const std::size_t n = parts.size();
    for (std::size_t r = 0; r < n; ++r) CHECK(table.value(r, n - 1) > 0);  // (1^K) is the last column
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        BigInt col = 0;
        Rational row = 0;
        for (std::size_t l = 0; l < n; ++l) {
          col += BigInt(static_cast<long>(table.value(l, a) * table.value(l, b)));
          row += ratio(BigInt(static_cast<long>(table.value(a, l) * table.value(b, l))), table.centralizer(l));
        }
        CHECK(col == (a == b ? table.centralizer(a) : BigInt(0)));
        CHECK(row == (a == b ? 1 : 0));
      }
  }
  const auto j = io::to_json(CharTable(3));
  CHECK(j["values"][1][0] == -1);
}

TEST_CASE("Schur polynomials in power sums") {
  const Truncation t = Truncation{}.with(Alphabet::P, 4);
  const Monomial p1sq = Monomial::var(VarId::p(1), 2), p2 = Monomial::var(VarId::p(2));
  CHECK(schur_in_power_sums(Partition{1}, t) == GradedSeries::term(t, Monomial::var(VarId::p(1))));
  CHECK(schur_in_power_sums(Partition{2}, t) ==
        GradedSeries::term(t, p1sq, ratio(1, 2)) + GradedSeries::term(t, p2, ratio(1, 2)));
  CHECK(schur_in_power_sums(Partition{1, 1}, t) ==
        GradedSeries::term(t, p1sq, ratio(1, 2)) + GradedSeries::term(t, p2, ratio(-1, 2)));
}

TEST_CASE("central weights") {
  CHECK(central_weight(Partition{1}) == 0);
  CHECK(central_weight(Partition{2}) == 1);
  CHECK(central_weight(Partition{1, 1}) == -1);
  for (int K = 1; K <= 12; ++K)
    for (const auto& l : partitions_of(K)) {
      const Rational w2 = central_weight(l) * 2;
      CHECK(w2.get_den() == 1);
      CHECK(central_weight(l) == Rational(content_sum(l)));
    }
}

TEST_CASE("cut-and-join operator") {
  const Truncation t = Truncation{}.with(Alphabet::P, 6);
  CHECK(cut_join_apply(GradedSeries::term(t, Monomial::var(VarId::p(1), 2))) ==
        GradedSeries::term(t, Monomial::var(VarId::p(2))));
  CHECK(cut_join_apply(GradedSeries::term(t, Monomial::var(VarId::p(2)))) ==
        GradedSeries::term(t, Monomial::var(VarId::p(1), 2)));
  for (int K = 1; K <= 6; ++K)
    for (const auto& l : partitions_of(K)) {
      const GradedSeries s = schur_in_power_sums(l, t);
      CHECK(cut_join_apply(s) == s * central_weight(l));
    }
}

TEST_CASE("factorization oracle") {
  auto lit = [](int g, Partition l, Partition m) { return oracle_count(g, l, m).literal; };
  CHECK(lit(0, {1}, {1}) == 1);
  CHECK(lit(0, {2}, {2}) == ratio(1, 2));
  const OracleResult s = oracle_count(0, Partition{2}, Partition{1, 1});
  CHECK(s.literal == ratio(1, 2));
  CHECK(s.raw_count == 1);
  CHECK(s.calibrated == 1);
  CHECK(s.transpositions == 1);
  // each of the two 3-cycles is a product of two transpositions in 3 ordered ways
  CHECK(oracle_count(0, Partition{3}, Partition{1, 1, 1}).raw_count == 6);

  for (int K = 1; K <= 4; ++K)
    for (const auto& l : partitions_of(K))
      for (const auto& m : partitions_of(K))
        for (int g = 0; g <= 1; ++g) {
          const int tr = static_cast<int>(l.length() + m.length()) + 2 * g - 2;
          if (tr < 0 || tr > 5) continue;
          CHECK(oracle_count(g, l, m).literal == oracle_count(g, m, l).literal);
        }

  CHECK_THROWS_AS(oracle_count(0, Partition{7}, Partition{7}), ResourceError);
  CHECK_THROWS_AS(oracle_count(3, Partition{2, 1}, Partition{3}), ResourceError);
  CHECK_THROWS_AS(oracle_count(0, Partition{2}, Partition{3}), std::invalid_argument);
}
