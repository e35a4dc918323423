#include <benchmark/benchmark.h>

#include "pvalkit/rng.hpp"
#include "pvalkit/simulate.hpp"
#include "pvalkit/ttest.hpp"

using namespace pvalkit;

static void BM_NormalDraws(benchmark::State& state) {
  SplitMix64 rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.next_normal());
}
BENCHMARK(BM_NormalDraws);

static void BM_OneSampleTest(benchmark::State& state) {
  SplitMix64 rng(2, 0);
  const TestSpec spec{Variant::one_sample, 0.0, Tails::one_greater};
  std::vector<double> x(5);
  for (auto _ : state) {
    for (auto& v : x) v = rng.next_normal(1.0, 1.0);
    benchmark::DoNotOptimize(t_test(summarize(x), spec).p);
  }
}
BENCHMARK(BM_OneSampleTest);

static void BM_FilterReplicates(benchmark::State& state) {
  sim::SimConfig cfg;
  cfg.reps = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 42;
  cfg.n_per_group = 5;
  cfg.population = {1.0, 1.0};
  cfg.null_mu = 0.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sim::sim_significance_filter(cfg, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FilterReplicates)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_OptionalStopping(benchmark::State& state) {
  sim::SimConfig cfg;
  cfg.reps = 10000;
  cfg.seed = 42;
  cfg.population = {0.0, 1.0};
  const sim::StoppingRule rule{5, 5, 0.05, 0.1};
  for (auto _ : state)
    benchmark::DoNotOptimize(sim::sim_optional_stopping(rule, cfg, 1));
  state.SetItemsProcessed(state.iterations() * cfg.reps);
}
BENCHMARK(BM_OptionalStopping)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
