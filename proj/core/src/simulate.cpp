#include "pvalkit/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pvalkit/rng.hpp"

namespace pvalkit::sim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZ95 = 1.959963984540054;

// Runs fn(replicate_index) over [0, reps) split into contiguous chunks, one
// chunk per worker. fn must only touch per-replicate state so the merge is
// order-independent.
template <class Fn>
void for_each_replicate(std::uint64_t reps, unsigned threads, Fn&& fn) {
  if (threads <= 1 || reps < 2) {
    for (std::uint64_t r = 0; r < reps; ++r) fn(r);
    return;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, reps);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (reps + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(begin + chunk, reps);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::uint64_t r = begin; r < end; ++r) fn(r);
    });
  }
  for (auto& t : pool) t.join();
}

double median_of(std::vector<double> v) {
  if (v.empty()) return kNaN;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
  return 0.5 * (v[mid - 1] + hi);
}

RateEstimate rate_estimate(std::uint64_t hits, std::uint64_t reps) {
  RateEstimate est;
  est.hits = hits;
  est.reps = reps;
  const double n = static_cast<double>(reps);
  const double p = static_cast<double>(hits) / n;
  est.estimate = p;
  est.se = std::sqrt(p * (1.0 - p) / n);
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  est.ci_low = std::fmax(center - half, 0.0);
  est.ci_high = std::fmin(center + half, 1.0);
  return est;
}

// Draws n values into buf and returns their summary. The draw order is part
// of the reproducibility contract: each replicate consumes its substream
// sequentially.
SampleSummary draw_sample(SplitMix64& rng, std::size_t n, double mu,
                          double sigma, std::vector<double>& buf) {
  buf.clear();
  for (std::size_t i = 0; i < n; ++i) buf.push_back(rng.next_normal(mu, sigma));
  return summarize(buf);
}

}  // namespace

void SimConfig::validate() const {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (n_per_group < 2)
    throw std::invalid_argument("n_per_group must be at least 2");
  if (!(population.sigma > 0.0) || !std::isfinite(population.sigma))
    throw std::invalid_argument("population sigma must be positive");
  if (!std::isfinite(population.mu) || !std::isfinite(null_mu))
    throw std::invalid_argument("population mu and null_mu must be finite");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");
}

void StoppingRule::validate() const {
  if (n1 < 2 || n_add < 1)
    throw std::invalid_argument("stopping rule needs n1 >= 2 and n_add >= 1");
  if (!(alpha_stop > 0.0) || !(p_continue_max <= 1.0) ||
      !(alpha_stop <= p_continue_max))
    throw std::invalid_argument(
        "stopping rule needs 0 < alpha_stop <= p_continue_max <= 1");
}

FilterRun sim_significance_filter(const SimConfig& cfg, unsigned threads) {
  cfg.validate();

  FilterRun run;
  run.records.resize(cfg.reps);
  const TestSpec spec{Variant::one_sample, cfg.null_mu, cfg.tails};

  for_each_replicate(cfg.reps, threads, [&](std::uint64_t r) {
    thread_local std::vector<double> buf;
    SplitMix64 rng(cfg.seed, r);
    const SampleSummary s = draw_sample(rng, cfg.n_per_group,
                                        cfg.population.mu,
                                        cfg.population.sigma, buf);
    const TTestResult t = t_test(s, spec);
    run.records[r] = {s.mean, s.sd, t.p, t.p < cfg.alpha};
  });

  const double true_d =
      (cfg.population.mu - cfg.null_mu) / cfg.population.sigma;

  std::vector<double> means, sds, ds, sig_means, sig_sds, sig_ds;
  means.reserve(cfg.reps);
  sds.reserve(cfg.reps);
  ds.reserve(cfg.reps);
  double max_ratio = -std::numeric_limits<double>::infinity();
  for (const ReplicateRecord& rec : run.records) {
    const double d = (rec.mean - cfg.null_mu) / rec.sd;
    means.push_back(rec.mean);
    sds.push_back(rec.sd);
    ds.push_back(d);
    if (rec.significant) {
      sig_means.push_back(rec.mean);
      sig_sds.push_back(rec.sd);
      sig_ds.push_back(d);
      if (true_d != 0.0) max_ratio = std::fmax(max_ratio, d / true_d);
    }
  }

  FilterReport& rep = run.report;
  rep.all_median_mean = median_of(std::move(means));
  rep.all_median_sd = median_of(std::move(sds));
  rep.median_d_all = median_of(std::move(ds));
  rep.sig_count = sig_means.size();
  rep.sig_median_mean = median_of(std::move(sig_means));
  rep.sig_median_sd = median_of(std::move(sig_sds));
  rep.median_d_sig = median_of(sig_ds);
  rep.exaggeration_ratio =
      (true_d != 0.0 && !sig_ds.empty()) ? rep.median_d_sig / true_d : kNaN;
  rep.max_exaggeration = sig_ds.empty() || true_d == 0.0 ? kNaN : max_ratio;
  return run;
}

TypeMSummary sim_type_m(const SimConfig& cfg, double true_effect,
                        unsigned threads) {
  if (true_effect == 0.0 || !std::isfinite(true_effect))
    throw std::invalid_argument("true_effect must be nonzero and finite");

  SimConfig effective = cfg;
  effective.population.mu =
      cfg.null_mu + true_effect * cfg.population.sigma;
  const FilterRun run = sim_significance_filter(effective, threads);

  TypeMSummary out;
  out.reps = cfg.reps;
  out.true_effect = true_effect;

  std::vector<double> ratios;
  std::uint64_t sign_errors = 0;
  for (const ReplicateRecord& rec : run.records) {
    if (!rec.significant) continue;
    const double d = (rec.mean - cfg.null_mu) / rec.sd;
    ratios.push_back(std::fabs(d) / std::fabs(true_effect));
    if (std::signbit(d) != std::signbit(true_effect)) ++sign_errors;
  }
  out.sig_count = ratios.size();
  if (ratios.empty()) return out;  // empty-conditional: no ratios emitted

  double sum = 0.0;
  for (double v : ratios) sum += v;
  out.mean_ratio = sum / static_cast<double>(ratios.size());
  out.sign_error_share =
      static_cast<double>(sign_errors) / static_cast<double>(ratios.size());
  out.median_ratio = median_of(std::move(ratios));
  return out;
}

RateEstimate sim_optional_stopping(const StoppingRule& rule,
                                   const SimConfig& cfg, unsigned threads) {
  cfg.validate();
  rule.validate();

  const TestSpec spec{Variant::two_sample_pooled, 0.0, cfg.tails};
  std::vector<std::uint8_t> rejected(cfg.reps, 0);

  for_each_replicate(cfg.reps, threads, [&](std::uint64_t r) {
    thread_local std::vector<double> g1, g2;
    SplitMix64 rng(cfg.seed, r);
    g1.clear();
    g2.clear();
    for (std::size_t i = 0; i < rule.n1; ++i)
      g1.push_back(rng.next_normal(cfg.population.mu, cfg.population.sigma));
    for (std::size_t i = 0; i < rule.n1; ++i)
      g2.push_back(rng.next_normal(cfg.population.mu, cfg.population.sigma));

    const double p1 = t_test(summarize(g1), summarize(g2), spec).p;
    if (p1 <= rule.alpha_stop) {
      rejected[r] = 1;
      return;
    }
    if (!(p1 < rule.p_continue_max)) return;

    for (std::size_t i = 0; i < rule.n_add; ++i)
      g1.push_back(rng.next_normal(cfg.population.mu, cfg.population.sigma));
    for (std::size_t i = 0; i < rule.n_add; ++i)
      g2.push_back(rng.next_normal(cfg.population.mu, cfg.population.sigma));
    const double p2 = t_test(summarize(g1), summarize(g2), spec).p;
    rejected[r] = p2 <= rule.alpha_stop ? 1 : 0;
  });

  std::uint64_t hits = 0;
  for (std::uint8_t b : rejected) hits += b;
  return rate_estimate(hits, cfg.reps);
}

FwerResult sim_fwer(std::size_t k, double alpha, const SimConfig& cfg,
                    unsigned threads) {
  cfg.validate();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1)");
  if (cfg.population.mu != cfg.null_mu)
    throw std::invalid_argument(
        "sim_fwer requires the global null: population.mu == null_mu");

  const TestSpec spec{Variant::one_sample, cfg.null_mu, cfg.tails};
  std::vector<std::uint8_t> rejected(cfg.reps, 0);

  for_each_replicate(cfg.reps, threads, [&](std::uint64_t r) {
    thread_local std::vector<double> buf;
    SplitMix64 rng(cfg.seed, r);
    for (std::size_t test = 0; test < k; ++test) {
      const SampleSummary s = draw_sample(rng, cfg.n_per_group,
                                          cfg.population.mu,
                                          cfg.population.sigma, buf);
      if (t_test(s, spec).p < alpha) {
        rejected[r] = 1;
        break;
      }
    }
  });

  std::uint64_t hits = 0;
  for (std::uint8_t b : rejected) hits += b;

  FwerResult out;
  out.simulated = rate_estimate(hits, cfg.reps);
  out.analytic = 1.0 - std::pow(1.0 - alpha, static_cast<double>(k));
  out.k = k;
  out.alpha = alpha;
  return out;
}

}  // namespace pvalkit::sim
