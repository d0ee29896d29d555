#include <benchmark/benchmark.h>

#include "domino/cells.hpp"

using namespace domino;

static void BM_TableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), rank = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(n, rank, Kernel::Serial));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(group_order(n)));
}

static void BM_TableParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), rank = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(n, rank, Kernel::Parallel));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(group_order(n)));
}

static void BM_VerifyOperators(benchmark::State& state) {
  const CellTable t = build_table(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_operators(t));
}

BENCHMARK(BM_TableSerial)->Args({4, 2})->Args({5, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Args({4, 2})->Args({5, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyOperators)->Args({4, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
