#include <filesystem>
#include <fstream>
#include <omp.h>
#include <unistd.h>

#include "catch_amalgamated.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/recursion.hpp"
#include "hurwitz/reduced.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("hurwitz_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("keys") {
  const XKey k{{1, 1}, {2, 0}, {0, 3}};
  CHECK(to_string(k) == "(2,0)(1,1)(0,3)");
  CHECK(parse_xkey("(0,3)(2,0)(1,1)") == k);
  CHECK(k.lambda_weight() == 3);
  CHECK(k.nu_weight() == 4);
  CHECK(XKey::from_partition(Partition{1, 2}) == XKey{{2, 0}, {1, 0}});
  CHECK_THROWS_AS(parse_xkey("(1,)"), std::invalid_argument);
  CHECK_THROWS_AS(XKey({{-1, 0}}), std::invalid_argument);
}

TEST_CASE("initial correlators") {
  const std::vector<int> one{0};
  CHECK(initial_x(one) == ZPoly::gen({0, 1}));
  const std::vector<int> two{1, 1};
  CHECK(initial_x(two) == ZPoly::gen({2, 2}, 2));
  const std::vector<int> three{2, 1, 0};
  CHECK(initial_x(three) == ZPoly::gen({3, 3}, 3));
}

TEST_CASE("known h_lambda polynomials") {
  RecursionEngine engine;
  for (const auto& ex : known_examples())
    CHECK(to_string(engine.compute(XKey::from_partition(ex.lambda))) == to_string(parse_zpoly(ex.polynomial)));
  CHECK(engine.lookup(XKey{{2, 0}})->rule.rfind("recursion", 0) == 0);
  CHECK(engine.lookup(XKey{{0, 1}})->rule == "initial");
}

TEST_CASE("pivot choice does not matter") {
  RecursionEngine engine;
  const ZEvaluator ev({8, std::nullopt, false});
  for (const XKey& k : {XKey{{2, 0}, {1, 1}, {1, 0}}, XKey{{3, 0}, {2, 0}}, XKey{{2, 1}, {1, 0}, {0, 0}}}) {
    const GradedSeries ref = ev.eval(engine.compute(k));
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k.entries()[i].first >= 1) CHECK(ev.eval(engine.compute_with_pivot(k, i)) == ref);
  }
  CHECK_THROWS_AS(engine.compute_with_pivot(XKey{{2, 0}, {0, 1}}, 1), std::invalid_argument);
}

TEST_CASE("reduced recursion agrees with the full one") {
  RecursionEngine full;
  ReducedEngine red;
  const ZEvaluator ev({8, std::nullopt, false});
  for (const XKey& k : {XKey{{2, 0}}, XKey{{3, 0}, {2, 0}}, XKey{{2, 1}, {1, 0}}, XKey{{2, 0}, {0, 1}, {0, 0}}})
    CHECK(ev.eval(red.compute(k)) == ev.eval(full.compute(k)));
  const XKey pure{{0, 1}, {0, 0}, {0, 0}};
  const std::vector<int> nu{1, 0, 0};
  CHECK(ev.eval(red.compute(pure)) == ev.eval(initial_x(nu)));
  CHECK_THROWS_AS(red.compute(XKey{{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK(ReducedKey::from_xkey(XKey{{1, 1}, {1, 1}}) == std::nullopt);
  const auto rk = ReducedKey::from_xkey(XKey{{2, 1}, {1, 0}, {0, 2}});
  REQUIRE(rk);
  CHECK(rk->to_xkey() == XKey{{2, 1}, {1, 0}, {0, 2}});
}

TEST_CASE("string and dilaton equations") {
  RecursionEngine engine;
  const ZEvaluator ev({8, std::nullopt, false});
  const auto checks = check_string_dilaton(engine, ev, 3, 1, 3);
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("table cache round trip") {
  const fs::path file = temp_file("xtable.json");
  RecursionEngine a;
  a.compute_all(4, 2);
  a.save(file);
  RecursionEngine b;
  REQUIRE(b.load(file));
  CHECK(b.size() == a.size());
  const auto sa = a.snapshot(), sb = b.snapshot();
  for (const auto& [k, e] : sa) CHECK(sb.at(k).value == e.value);
  // loaded entries are reused, not recomputed
  const std::size_t n = b.size();
  b.compute(XKey{{2, 0}, {2, 0}});
  CHECK(b.size() == n);

  io::Json doc;
  {
    std::ifstream in(file);
    in >> doc;
  }
  doc["version"] = "xtable-v0";
  {
    std::ofstream out(file);
    out << doc.dump();
  }
  RecursionEngine c;
  CHECK_FALSE(c.load(file));
  CHECK(c.size() == 0);
  CHECK_FALSE(c.load(temp_file("missing.json")));
  fs::remove(file);
}

TEST_CASE("parallel table fill matches the serial one") {
  RecursionEngine serial, parallel;
  omp_set_num_threads(1);
  serial.compute_all(5, 3, 1);
  omp_set_num_threads(4);
  parallel.compute_all(5, 3, 1);
  CHECK(serial.size() == parallel.size());
  const auto s = serial.snapshot(), p = parallel.snapshot();
  for (const auto& [k, e] : s) CHECK(p.at(k).value == e.value);
}
