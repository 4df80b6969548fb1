// Serial reference vs OpenMP drivers for the class sweep and connected count.

#include <benchmark/benchmark.h>

#include "mostar/enumerate.hpp"

namespace {

using mostar::enumerate::GraphClassFilter;

void BM_SweepSerial(benchmark::State& state) {
  const GraphClassFilter filter{static_cast<int>(state.range(0)), std::nullopt, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(mostar::enumerate::sweep_classes_serial(filter));
}

void BM_SweepParallel(benchmark::State& state) {
  const GraphClassFilter filter{static_cast<int>(state.range(0)), std::nullopt, std::nullopt};
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mostar::enumerate::sweep_classes(filter, workers));
}

void BM_CountConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mostar::enumerate::count_connected(n, workers));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{5, 6, 7}, {1, 2, 4, 0}})
    ->ArgNames({"n", "workers"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountConnected)
    ->ArgsProduct({{6, 7}, {1, 4, 0}})
    ->ArgNames({"n", "workers"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
