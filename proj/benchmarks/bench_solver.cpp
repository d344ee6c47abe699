#include <benchmark/benchmark.h>

#include "domgame/domination.hpp"
#include "domgame/families.hpp"
#include "domgame/solver.hpp"

using namespace domgame;

namespace {

const std::vector<std::string>& bench_families() {
  static const std::vector<std::string> names = {"U", "V", "Y", "X", "Q", "Zk", "W"};
  return names;
}

// Fresh solver per iteration so the table starts empty.
void BM_FamilyGammaG(benchmark::State& state) {
  const auto& name = bench_families()[state.range(0)];
  const Graph g = make_family(name, static_cast<int>(state.range(1))).marked.graph;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    Solver solver(g);
    benchmark::DoNotOptimize(solver.value({}, Player::Dominator));
    nodes = solver.stats().nodes;
  }
  state.SetLabel(name + " n=" + std::to_string(g.order()));
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_FamilyGammaG)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_Cycle(benchmark::State& state, SolverOptions options) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    Solver solver(g, options);
    benchmark::DoNotOptimize(solver.value({}, Player::Staller));
    nodes = solver.stats().nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK_CAPTURE(BM_Cycle, pruned, SolverOptions{})->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cycle, unordered, SolverOptions{.pruning = true, .move_ordering = false})
    ->DenseRange(10, 22, 4)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cycle, unpruned, SolverOptions{.pruning = false, .move_ordering = false})
    ->DenseRange(10, 18, 4)
    ->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_game_value(g, {}));
}
BENCHMARK(BM_Oracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DominationNumber(benchmark::State& state) {
  const Graph g = make_family("X", static_cast<int>(state.range(0))).marked.graph;
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g));
  state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(BM_DominationNumber)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
