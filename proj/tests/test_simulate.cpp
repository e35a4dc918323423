#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pvalkit/multiplicity.hpp"
#include "pvalkit/simulate.hpp"
#include "testutil.hpp"

using namespace pvalkit;
using sim::SimConfig;

namespace {

SimConfig paper_filter_config(std::uint64_t reps, std::uint64_t seed) {
  SimConfig cfg;
  cfg.reps = reps;
  cfg.seed = seed;
  cfg.n_per_group = 5;
  cfg.population = {1.0, 1.0};
  cfg.null_mu = 0.0;
  cfg.alpha = 0.05;
  cfg.tails = Tails::one_greater;
  return cfg;
}

bool reports_equal(const sim::FilterReport& a, const sim::FilterReport& b) {
  return a.all_median_mean == b.all_median_mean &&
         a.all_median_sd == b.all_median_sd &&
         a.sig_median_mean == b.sig_median_mean &&
         a.sig_median_sd == b.sig_median_sd && a.sig_count == b.sig_count &&
         a.median_d_all == b.median_d_all && a.median_d_sig == b.median_d_sig &&
         a.exaggeration_ratio == b.exaggeration_ratio &&
         a.max_exaggeration == b.max_exaggeration;
}

}  // namespace

TEST_CASE("filter run is bit-identical across reruns and thread counts") {
  const auto cfg = paper_filter_config(20000, 909);
  const auto one = sim::sim_significance_filter(cfg, 1);
  const auto again = sim::sim_significance_filter(cfg, 1);
  const auto parallel = sim::sim_significance_filter(cfg, 3);
  const auto parallel7 = sim::sim_significance_filter(cfg, 7);
  CHECK(reports_equal(one.report, again.report));
  CHECK(reports_equal(one.report, parallel.report));
  CHECK(reports_equal(one.report, parallel7.report));
  REQUIRE(one.records.size() == parallel.records.size());
  for (std::size_t r = 0; r < one.records.size(); ++r) {
    CHECK(one.records[r].mean == parallel.records[r].mean);
    CHECK(one.records[r].p == parallel.records[r].p);
  }
  // different seed actually changes the draw
  auto other = cfg;
  other.seed = 910;
  CHECK_FALSE(reports_equal(one.report,
                            sim::sim_significance_filter(other, 1).report));
}

TEST_CASE("alpha = 1 disables the filter") {
  auto cfg = paper_filter_config(4000, 11);
  cfg.alpha = 1.0;
  const auto run = sim::sim_significance_filter(cfg, 2);
  CHECK(run.report.sig_count == cfg.reps);
  CHECK(run.report.sig_median_mean == run.report.all_median_mean);
  CHECK(run.report.sig_median_sd == run.report.all_median_sd);
}

TEST_CASE("filter orders the summaries the expected way") {
  const auto run = sim::sim_significance_filter(paper_filter_config(300000, 5), 2);
  const auto& r = run.report;
  // unfiltered estimates track the truth
  CHECK_NEAR(r.all_median_mean, 1.0, 0.01);
  CHECK_NEAR(r.all_median_sd, 0.9161, 0.01);  // median of a chi_4/2 scale
  CHECK_NEAR(r.median_d_all, 1.07345, 0.01);  // frozen 1e6-replicate oracle
  // the filtered subset over-estimates the mean and under-estimates the sd
  CHECK(r.sig_median_mean > r.all_median_mean);
  CHECK(r.sig_median_sd < r.all_median_sd);
  CHECK(r.exaggeration_ratio > 1.0);
  CHECK(r.max_exaggeration >= r.exaggeration_ratio);

  // mean per-replicate sd at n=5, sigma=1: the small-sample expectation is
  // c4(5) = sqrt(2/4) Gamma(2.5)/Gamma(2) = 0.9399856
  double sum_sd = 0.0;
  for (const auto& rec : run.records) sum_sd += rec.sd;
  CHECK_NEAR(sum_sd / static_cast<double>(run.records.size()), 0.9399856,
             0.005);
}

TEST_CASE("null single-stage P-values are uniform (KS at the 1% level)") {
  auto cfg = paper_filter_config(100000, 314159);
  cfg.population.mu = 0.0;  // null true
  const auto run = sim::sim_significance_filter(cfg, 2);
  std::vector<double> p;
  p.reserve(run.records.size());
  for (const auto& rec : run.records) p.push_back(rec.p);
  std::sort(p.begin(), p.end());
  double d = 0.0;
  const double n = static_cast<double>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::fmax(d, std::fmax(std::fabs(p[i] - lo), std::fabs(p[i] - hi)));
  }
  // asymptotic 1% critical value 1.62762 / sqrt(n)
  CHECK(d < 1.62762 / std::sqrt(n));
}

TEST_CASE("type M ratios approach 1 when everything is significant") {
  auto cfg = paper_filter_config(200000, 2222);
  const auto s = sim::sim_type_m(cfg, 10.0, 2);
  REQUIRE(s.median_ratio.has_value());
  CHECK_NEAR(*s.median_ratio, 1.09185, 0.02);  // frozen 1e6-replicate oracle
  CHECK(s.sig_count == s.reps);              // the filter passes everything
  CHECK(*s.sign_error_share == 0.0);
}

TEST_CASE("type M exaggeration at the chapter scenario and its n-trend") {
  auto cfg = paper_filter_config(200000, 2223);
  const auto s5 = sim::sim_type_m(cfg, 1.0, 2);
  REQUIRE(s5.median_ratio.has_value());
  // the filtered median effect runs ~50% above the truth
  CHECK_NEAR(*s5.median_ratio, 1.5, 0.1);
  // frozen 1e6-replicate oracle values, tolerance covers both runs' noise
  CHECK_NEAR(*s5.median_ratio, 1.47647, 0.03);

  const struct {
    std::size_t n;
    double frozen;
    double tol;
  } trend[] = {{3, 2.64346, 0.08},
               {5, 1.47647, 0.03},
               {10, 1.08589, 0.015},
               {20, 1.01628, 0.01}};
  double prev = 1e9;
  for (const auto& row : trend) {
    auto c = cfg;
    c.n_per_group = row.n;
    const auto s = sim::sim_type_m(c, 1.0, 2);
    REQUIRE(s.median_ratio.has_value());
    CHECK_NEAR(*s.median_ratio, row.frozen, row.tol);
    CHECK(*s.median_ratio < prev);  // bias shrinks as n grows
    prev = *s.median_ratio;
  }
}

TEST_CASE("type M with nothing significant reports the empty conditional") {
  auto cfg = paper_filter_config(200, 5150);
  cfg.alpha = 1e-12;
  const auto s = sim::sim_type_m(cfg, 0.1, 1);
  CHECK(s.sig_count == 0);
  CHECK_FALSE(s.mean_ratio.has_value());
  CHECK_FALSE(s.median_ratio.has_value());
  CHECK_FALSE(s.sign_error_share.has_value());
  CHECK_THROWS_AS(sim::sim_type_m(cfg, 0.0, 1), std::invalid_argument);
}

TEST_CASE("degenerate stopping rule reduces to a single-stage test") {
  SimConfig cfg;
  cfg.reps = 200000;
  cfg.seed = 606;
  cfg.population = {0.0, 1.0};
  cfg.tails = Tails::one_greater;
  const sim::StoppingRule rule{5, 5, 0.05, 0.05};  // never continues
  const auto est = sim::sim_optional_stopping(rule, cfg, 2);
  const double se = std::sqrt(0.05 * 0.95 / static_cast<double>(cfg.reps));
  CHECK_NEAR(est.estimate, 0.05, 3.0 * se);
}

TEST_CASE("optional stopping inflates the false positive rate") {
  SimConfig cfg;
  cfg.reps = 200000;
  cfg.seed = 607;
  cfg.population = {0.0, 1.0};
  cfg.tails = Tails::one_greater;
  const auto est =
      sim::sim_optional_stopping({5, 5, 0.05, 0.1}, cfg, 2);
  // strictly above alpha_stop at 3 SE whenever continuation is possible
  CHECK(est.estimate - 3.0 * est.se > 0.05);
  CHECK(est.ci_low <= est.estimate);
  CHECK(est.ci_high >= est.estimate);

  CHECK_THROWS_AS(
      sim::sim_optional_stopping({5, 5, 0.1, 0.05}, cfg, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sim::sim_optional_stopping({1, 5, 0.05, 0.1}, cfg, 1),
      std::invalid_argument);
}

TEST_CASE("fwer simulation matches the closed form") {
  SimConfig cfg;
  cfg.reps = 200000;
  cfg.seed = 808;
  cfg.n_per_group = 5;
  cfg.population = {0.0, 1.0};
  cfg.null_mu = 0.0;
  cfg.tails = Tails::one_greater;

  const auto k1 = sim::sim_fwer(1, 0.05, cfg, 2);
  CHECK_NEAR(k1.simulated.estimate, 0.05, 3.0 * k1.simulated.se);

  const auto k20 = sim::sim_fwer(20, 0.05, cfg, 2);
  CHECK_NEAR(k20.analytic, 0.6415141, 1e-6);
  CHECK_NEAR(k20.simulated.estimate, k20.analytic, 3.0 * k20.simulated.se);

  // Bonferroni-adjusted per-test threshold keeps the family-wise rate at or
  // below the nominal level
  const double adj = multiplicity::bonferroni_threshold(0.05, 20);
  const auto k20adj = sim::sim_fwer(20, adj, cfg, 2);
  CHECK_NEAR(k20adj.analytic, 0.0488301, 1e-6);
  CHECK_NEAR(k20adj.simulated.estimate, k20adj.analytic,
             3.0 * std::sqrt(0.0488 * 0.9512 / static_cast<double>(cfg.reps)));

  auto bad = cfg;
  bad.population.mu = 0.5;
  CHECK_THROWS_AS(sim::sim_fwer(20, 0.05, bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(sim::sim_fwer(0, 0.05, cfg, 1), std::invalid_argument);
}

TEST_CASE("config validation") {
  SimConfig cfg;
  cfg.reps = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.reps = 10;
  cfg.n_per_group = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.n_per_group = 5;
  cfg.population.sigma = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.population.sigma = 1.0;
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
