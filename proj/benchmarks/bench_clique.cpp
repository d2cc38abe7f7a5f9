#include <benchmark/benchmark.h>

#include "minorforge/clique.hpp"
#include "minorforge/generators.hpp"

using namespace minorforge;

static void BM_CliqueBlowup(benchmark::State& state) {
  Philox rng(1, 0);
  const Graph g = gen_tfp_blowup_complement(100, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_max_clique(g));
  state.SetLabel("|V|=" + std::to_string(g.vertex_count()));
}
BENCHMARK(BM_CliqueBlowup)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_CliqueTfpBudgeted(benchmark::State& state) {
  Philox rng(2, 0);
  const Graph g = gen_tfp_complement(static_cast<int>(state.range(0)), rng);
  CliqueSearchOptions opts;
  opts.node_budget = 200'000;
  for (auto _ : state) benchmark::DoNotOptimize(find_max_clique(g, opts));
}
BENCHMARK(BM_CliqueTfpBudgeted)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
