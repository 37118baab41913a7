#include <benchmark/benchmark.h>

#include "subclose/codes.hpp"
#include "subclose/conjecture.hpp"
#include "subclose/families.hpp"
#include "subclose/graphs.hpp"
#include "subclose/grassmann.hpp"

using namespace subclose;

static void BM_OracleK26(benchmark::State& state) {
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(k_r_oracle(2, 6, r).value);
}
BENCHMARK(BM_OracleK26)->DenseRange(5, 10)->Unit(benchmark::kMillisecond);

static void BM_OracleUnpruned(benchmark::State& state) {
  OracleOptions opts;
  opts.prune = false;
  for (auto _ : state) benchmark::DoNotOptimize(k_r_oracle(2, 6, state.range(0), opts).value);
}
BENCHMARK(BM_OracleUnpruned)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Grassmannian(benchmark::State& state) {
  const auto f = FieldTable::for_order(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_grassmannian(2, static_cast<int>(state.range(0)), f).size());
}
BENCHMARK(BM_Grassmannian)->Args({4, 2})->Args({5, 2})->Args({5, 3})->Args({6, 2})->Args({5, 4});

static void BM_HigherWeight(benchmark::State& state) {
  const ConjectureHarness h(2, 4, static_cast<int>(state.range(0)), std::nullopt);
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(higher_weights_exhaustive(h.code(), r));
}
BENCHMARK(BM_HigherWeight)->Args({2, 1})->Args({2, 3})->Args({3, 1})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_GraphCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graph_census(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_GraphCensus)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
