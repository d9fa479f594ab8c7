#include "hedrite/enumerate.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_GenerateSerial(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto out = hedrite::generate_serial(i, n);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_GenerateParallel(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto out = hedrite::generate(i, n, threads);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = threads;
}

}  // namespace

BENCHMARK(BM_GenerateSerial)->Args({6, 15})->Args({8, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)
    ->ArgsProduct({{6}, {15}, {1, 2, 4, 8}})
    ->ArgsProduct({{8}, {18}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
