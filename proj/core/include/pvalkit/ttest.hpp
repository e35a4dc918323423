#ifndef PVALKIT_TTEST_HPP
#define PVALKIT_TTEST_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvalkit {

enum class Tails { one_greater, one_less, two };
enum class Variant { two_sample_pooled, two_sample_welch, one_sample };

std::string to_string(Tails tails);
std::string to_string(Variant variant);
Tails tails_from_string(const std::string& s);
Variant variant_from_string(const std::string& s);

// Sufficient statistics for one group. sd uses the n-1 divisor.
struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
};

// Test configuration. null_delta is the hypothesized difference between
// means (two-sample) or the hypothesized mean itself (one-sample).
struct TestSpec {
  Variant variant = Variant::two_sample_pooled;
  double null_delta = 0.0;
  Tails tails = Tails::one_greater;
};

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 0.0;
  double mean_diff = 0.0;  // m1 - m2, or mean - null_delta for one-sample
  std::optional<double> pooled_sd;  // present for the pooled variant only
  double se = 0.0;                  // standard error scaling the statistic
  double cohen_d = 0.0;
  Tails tails = Tails::one_greater;
  Variant variant = Variant::two_sample_pooled;
  // Set when the scale is exactly zero but the effect is not; p is then
  // reported as the limiting 0 or 1 rather than being clamped or adjusted.
  bool degenerate_scale = false;
};

// Mean and n-1 standard deviation of at least two finite values.
SampleSummary summarize(std::span<const double> data);

// Two-sample t test (pooled or Welch) of g1 against g2.
TTestResult t_test(const SampleSummary& g1, const SampleSummary& g2,
                   const TestSpec& spec);

// One-sample t test of g1 against spec.null_delta.
TTestResult t_test(const SampleSummary& g1, const TestSpec& spec);

// A (control, treatment) pair where treatment = control + shift, with the
// shift solved so the configured t test reproduces target_p exactly.
struct PseudoDataFit {
  std::vector<double> control;
  std::vector<double> treatment;
  double shift = 0.0;
  double achieved_p = 0.0;
};

// Constructs pseudo-data hitting an exact target P by elementwise shift of
// the control group; within-group standard deviations are untouched by
// construction. Requires control.size() == n, a nonconstant control, a
// two-sample spec, and 0 < target_p < 1. The shift is found by monotone
// root finding on the recomputed P (|achieved - target| <= 1e-9).
PseudoDataFit fit_pseudo_data(std::span<const double> control, std::size_t n,
                              double target_p, const TestSpec& spec);

}  // namespace pvalkit

#endif  // PVALKIT_TTEST_HPP
