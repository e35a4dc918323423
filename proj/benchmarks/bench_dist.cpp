#include <benchmark/benchmark.h>

#include "pvalkit/dist.hpp"

using namespace pvalkit;

static void BM_TCdf(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::t_cdf(1.0 + t, 8.0));
    t = t > 3.0 ? 0.0 : t + 1e-4;
  }
}
BENCHMARK(BM_TCdf);

static void BM_TQuantile(benchmark::State& state) {
  double p = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::t_quantile(p, 8.0));
    p = p > 0.99 ? 0.6 : p + 1e-4;
  }
}
BENCHMARK(BM_TQuantile);

static void BM_NctCdfSeries(benchmark::State& state) {
  const double ncp = static_cast<double>(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::nct_cdf(ncp + t, 18.0, ncp));
    t = t > 2.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_NctCdfSeries)->Arg(1)->Arg(5)->Arg(15);

static void BM_NctCdfQuadrature(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::nct_cdf(25.0 + t, 18.0, 25.0));
    t = t > 2.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_NctCdfQuadrature);

static void BM_NctQuantile(benchmark::State& state) {
  double q = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::nct_quantile(q, 18.0, 3.0));
    q = q > 0.9 ? 0.3 : q + 1e-3;
  }
}
BENCHMARK(BM_NctQuantile);

static void BM_NormQuantile(benchmark::State& state) {
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::norm_quantile(p));
    p = p > 0.999999 ? 1e-6 : p + 1e-5;
  }
}
BENCHMARK(BM_NormQuantile);

BENCHMARK_MAIN();
