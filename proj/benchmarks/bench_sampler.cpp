#include <benchmark/benchmark.h>

#include <cmath>

#include "minorforge/generators.hpp"
#include "minorforge/matching_sampler.hpp"

using namespace minorforge;

static void BM_UniformPairing(benchmark::State& state) {
  Philox rng(3, 0);
  const int x = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_pairing(x, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_UniformPairing)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ConditionedPairing(benchmark::State& state) {
  Philox gen(4, 0);
  const Graph g = gen_tfp_complement(static_cast<int>(state.range(0)), gen);
  const Rational lambda = Rational::floor_of(std::cbrt(static_cast<double>(g.vertex_count() * g.vertex_count()) / 4));
  Philox rng(5, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_conditioned(g, lambda, 1'000'000, rng));
}
BENCHMARK(BM_ConditionedPairing)->Arg(200)->Arg(400);
