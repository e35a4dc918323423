#ifndef PVALKIT_SIMULATE_HPP
#define PVALKIT_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pvalkit/ttest.hpp"

// Seeded, reproducible Monte Carlo of the significance filter, type M
// exaggeration, two-stage optional stopping, and family-wise error.
//
// Determinism contract: every replicate draws from its own SplitMix64
// substream keyed by (seed, replicate index) and results are merged by
// index, so identical (seed, config) produce bit-identical reports for any
// thread count.

namespace pvalkit::sim {

// Data-generating truth for one normal population.
struct PopulationSpec {
  double mu = 0.0;
  double sigma = 1.0;
};

struct SimConfig {
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  std::size_t n_per_group = 5;
  PopulationSpec population;
  double null_mu = 0.0;  // one-sample null
  double alpha = 0.05;
  Tails tails = Tails::one_greater;

  void validate() const;  // throws std::invalid_argument
};

// Two-stage optional-stopping protocol: test at n1 per group; reject at
// p <= alpha_stop, continue iff alpha_stop < p < p_continue_max; then pool
// n1 + n_add per group and test once more at the same alpha_stop.
// p_continue_max == alpha_stop degenerates to a single-stage test.
struct StoppingRule {
  std::size_t n1 = 5;
  std::size_t n_add = 5;
  double alpha_stop = 0.05;
  double p_continue_max = 0.1;

  void validate() const;
};

struct ReplicateRecord {
  double mean = 0.0;
  double sd = 0.0;
  double p = 0.0;
  bool significant = false;
};

// Paired unfiltered / significant-subset summaries. exaggeration_ratio is
// the median standardized effect among significant replicates divided by
// the true delta/sigma (NaN when nothing is significant or the true effect
// is zero); max_exaggeration is reported but intentionally never asserted,
// extreme order statistics being unstable run to run.
struct FilterReport {
  double all_median_mean = 0.0;
  double all_median_sd = 0.0;
  double sig_median_mean = 0.0;
  double sig_median_sd = 0.0;
  std::uint64_t sig_count = 0;
  double median_d_all = 0.0;
  double median_d_sig = 0.0;
  double exaggeration_ratio = 0.0;
  double max_exaggeration = 0.0;
};

struct FilterRun {
  FilterReport report;
  std::vector<ReplicateRecord> records;  // indexed by replicate
};

// Draws reps samples of n from N(mu, sigma^2), runs a one-sample t test of
// each against null_mu, and partitions the summaries by p < alpha.
FilterRun sim_significance_filter(const SimConfig& cfg, unsigned threads = 1);

// Magnitude-error summary conditional on significance. Ratios are
// |observed d| / |true_effect|; sign_error_share is the fraction of
// significant replicates whose observed effect has the wrong sign. The
// optional fields are empty when no replicate is significant.
struct TypeMSummary {
  std::uint64_t reps = 0;
  std::uint64_t sig_count = 0;
  double true_effect = 0.0;
  std::optional<double> mean_ratio;
  std::optional<double> median_ratio;
  std::optional<double> sign_error_share;
};

// Runs the significance-filter simulation with the population mean set to
// null_mu + true_effect * sigma (cfg.population.mu is ignored so the true
// standardized effect is exactly the one requested).
TypeMSummary sim_type_m(const SimConfig& cfg, double true_effect,
                        unsigned threads = 1);

struct RateEstimate {
  double estimate = 0.0;
  double se = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval
  double ci_high = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t reps = 0;
};

// False-positive rate of the optional-stopping protocol under a true null:
// both groups are drawn from cfg.population, so the two-sample null holds
// by construction. Uses the pooled test with cfg.tails.
RateEstimate sim_optional_stopping(const StoppingRule& rule,
                                   const SimConfig& cfg, unsigned threads = 1);

struct FwerResult {
  RateEstimate simulated;  // frequency of >= 1 rejection among k tests
  double analytic = 0.0;   // 1 - (1 - alpha)^k
  std::size_t k = 0;
  double alpha = 0.0;
};

// k independent one-sample t tests per replicate under the global null;
// requires cfg.population.mu == cfg.null_mu.
FwerResult sim_fwer(std::size_t k, double alpha, const SimConfig& cfg,
                    unsigned threads = 1);

}  // namespace pvalkit::sim

#endif  // PVALKIT_SIMULATE_HPP
