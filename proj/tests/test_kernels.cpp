#include <omp.h>

#include "catch_amalgamated.hpp"
#include "hurwitz/classical.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/series_kernels.hpp"
#include "test_util.hpp"

using namespace hurwitz;

// The parallel kernels must agree exactly with the serial reference,
// including on a single-core machine, so force several threads.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

TEST_CASE("parallel multiply equals serial multiply") {
  Threads guard(4);
  std::mt19937 rng(42);
  const Truncation t = Truncation{}.with(Alphabet::Q, 8).with(Alphabet::P, 8);
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = testutil::random_qp_series(rng, t, 120);
    const auto b = testutil::random_qp_series(rng, t, 120);
    REQUIRE(a.size() * b.size() >= 4096);
    CHECK(kernels::multiply_parallel(a, b) == kernels::multiply_serial(a, b));
  }
}

TEST_CASE("parallel cut-and-join equals serial cut-and-join") {
  Threads guard(4);
  const HurwitzPotential pot = evolve(7, 2);
  REQUIRE(pot.eH.size() >= 256);
  CHECK(kernels::cut_join_parallel(pot.eH) == kernels::cut_join_serial(pot.eH));
}

TEST_CASE("parallel oracle equals serial oracle") {
  Threads guard(4);
  for (const auto& [l, m, k] : std::vector<std::tuple<Partition, Partition, int>>{
           {{2, 1}, {3}, 1}, {{2, 2}, {1, 1, 1, 1}, 4}, {{3, 1}, {2, 2}, 2}, {{5}, {3, 2}, 4}})
    CHECK(kernels::count_factorizations_parallel(l, m, k) == kernels::count_factorizations_serial(l, m, k));
}
