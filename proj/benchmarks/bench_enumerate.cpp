#include <benchmark/benchmark.h>

#include "domgame/enumerate.hpp"
#include "domgame/verifier.hpp"

using namespace domgame;

namespace {

void BM_LabeledGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LabeledGraphEnumerator e(n, false);
    std::uint64_t count = 0;
    while (auto g = e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LabeledGraphs)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_LabeledTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LabeledTreeEnumerator e(n);
    std::uint64_t count = 0;
    while (auto t = e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LabeledTrees)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_ScanImpossibility(benchmark::State& state) {
  ScanOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan_impossibility(static_cast<int>(state.range(0)), options).graphs);
}
BENCHMARK(BM_ScanImpossibility)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace
