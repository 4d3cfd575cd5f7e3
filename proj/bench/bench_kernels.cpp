#include <benchmark/benchmark.h>

#include <random>

#include "hurwitz/classical.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/series_kernels.hpp"

using namespace hurwitz;

namespace {

// Dense-ish q/p series: every partition pair up to the weight bound.
GradedSeries dense_series(int bound, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  const Truncation t = potential_truncation(bound, 0);
  GradedSeries s(t);
  for (int a = 0; a <= bound; ++a)
    for (const auto& pa : partitions_of(a))
      for (int b = 0; b <= bound; ++b)
        for (const auto& pb : partitions_of(b)) {
          std::vector<Monomial::Factor> f;
          for (int x : pa.parts()) f.emplace_back(VarId::p(x), 1);
          for (int x : pb.parts()) f.emplace_back(VarId::q(x), 1);
          s.add_term(Monomial(std::move(f)), num(rng));
        }
  return s;
}

void BM_MultiplySerial(benchmark::State& st) {
  const GradedSeries a = dense_series(static_cast<int>(st.range(0)), 1), b = dense_series(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& st) {
  const GradedSeries a = dense_series(static_cast<int>(st.range(0)), 1), b = dense_series(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b));
}

void BM_CutJoinSerial(benchmark::State& st) {
  const GradedSeries s = dense_series(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cut_join_serial(s));
}

void BM_CutJoinParallel(benchmark::State& st) {
  const GradedSeries s = dense_series(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::cut_join_parallel(s));
}

void BM_FactorizationsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_factorizations_serial(Partition{5}, Partition{3, 2}, 4));
}

void BM_FactorizationsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_factorizations_parallel(Partition{5}, Partition{3, 2}, 4));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(6);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(6);
BENCHMARK(BM_CutJoinSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_CutJoinParallel)->Arg(6)->Arg(8);
BENCHMARK(BM_FactorizationsSerial);
BENCHMARK(BM_FactorizationsParallel);

BENCHMARK_MAIN();
