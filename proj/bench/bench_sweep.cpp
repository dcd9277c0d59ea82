#include "oddimm/batch.hpp"
#include "oddimm/family.hpp"
#include "oddimm/immersion.hpp"

#include <benchmark/benchmark.h>

using namespace oddimm;

namespace {

const std::vector<Check> checks{Check::main, Check::appendix, Check::vergara};

const std::vector<Graph> &family(int n) {
  static std::vector<std::vector<Graph>> cache(10);
  if (cache[n].empty()) cache[n] = enumerate_alpha_le2(n);
  return cache[n];
}

void sweep_serial(benchmark::State &state) {
  const auto &graphs = family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(graphs, checks));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void sweep_parallel(benchmark::State &state) {
  const auto &graphs = family(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_parallel(graphs, checks, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void max_immersion_random(benchmark::State &state) {
  auto graphs = sample_alpha_le2(static_cast<int>(state.range(0)), 32, 1);
  for (auto _ : state)
    for (const Graph &g : graphs) benchmark::DoNotOptimize(max_clique_immersion(g, ImmersionFlags::strong_odd()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

} // namespace

BENCHMARK(sweep_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->Args({7, 1})->Args({7, 4})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(max_immersion_random)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
