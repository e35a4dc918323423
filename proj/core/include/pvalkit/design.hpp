#ifndef PVALKIT_DESIGN_HPP
#define PVALKIT_DESIGN_HPP

#include <string>
#include <vector>

namespace pvalkit::design {

enum class DesignTails { one, two };
enum class DesignVariant { two_sample, one_sample };

std::string to_string(DesignTails t);
std::string to_string(DesignVariant v);
DesignTails design_tails_from_string(const std::string& s);
DesignVariant design_variant_from_string(const std::string& s);

// A point on the design space. n_per_group is continuous so sample-size
// solving can report fractional solutions before rounding up.
struct DesignQuery {
  double std_effect = 0.0;   // delta / sigma
  double n_per_group = 0.0;  // > 1 so the degrees of freedom stay positive
  double alpha = 0.05;
  DesignTails tails = DesignTails::one;
  DesignVariant variant = DesignVariant::two_sample;
};

// Noncentrality of the t statistic: (delta/sigma) * sqrt(n/2) for equal-n
// two-sample designs, (delta/sigma) * sqrt(n) for one-sample.
double noncentrality(double std_effect, double n_per_group,
                     DesignVariant variant);
// Unequal group sizes: (delta/sigma) * sqrt(n1 n2 / (n1 + n2)).
double noncentrality_unequal(double std_effect, double n1, double n2);

double degrees_of_freedom(double n_per_group, DesignVariant variant);

// Exact power of the t test at the query point. One-tailed designs place
// the rejection region in the direction of the alternative, so power is a
// function of |std_effect|; two-tailed power sums both rejection regions.
double power(const DesignQuery& q);

// Continuous sample size with power(n) = power_target, by monotone root
// finding in n. Throws std::domain_error when power_target <= alpha (no
// finite n attains it).
double solve_n(double std_effect, double alpha, double power_target,
               DesignTails tails, DesignVariant variant);

// Conventional round-up companion to solve_n.
long solve_n_rounded(double std_effect, double alpha, double power_target,
                     DesignTails tails, DesignVariant variant);

enum class CurveKind { power, p_quantile, p_mean };

// values[i][j] holds the curve value at (n_list[i], effect_grid[j]).
struct CurveTable {
  CurveKind kind = CurveKind::power;
  double alpha = 0.0;  // meaningful for power curves
  double q = 0.0;      // quantile level for p_quantile curves
  DesignTails tails = DesignTails::one;
  std::vector<double> n_list;
  std::vector<double> effect_grid;
  std::vector<std::vector<double>> values;
};

CurveTable power_curve(const std::vector<double>& n_list,
                       const std::vector<double>& effect_grid, double alpha,
                       DesignTails tails);

// q-quantile of the one-tailed P-value distribution under the alternative:
// 1 - t_cdf(nct_quantile(1 - q, df, ncp), df). Uniform under the null, so
// p_quantile(q, n, 0) = q.
double p_quantile(double q, double n_per_group, double std_effect,
                  DesignVariant variant = DesignVariant::two_sample);

// Mean of the P-value distribution under the alternative via adaptive
// quadrature of q -> p_quantile(q, .) over (0, 1), tolerance 1e-6.
double p_mean(double n_per_group, double std_effect,
              DesignVariant variant = DesignVariant::two_sample);

CurveTable p_quantile_curve(double q, const std::vector<double>& n_list,
                            const std::vector<double>& effect_grid);
CurveTable p_mean_curve(const std::vector<double>& n_list,
                        const std::vector<double>& effect_grid);

// Power at the effect size implied by an already-observed P-value. This is
// a diagnostic only: observed P and post-experiment power are a one-to-one
// transform of each other at fixed n, so a disappointing P always maps to
// low power and the number carries no information beyond P itself. The
// warning text must be surfaced alongside the value.
struct PostHocPower {
  double value = 0.0;
  double observed_effect = 0.0;
  const char* warning = nullptr;
};

PostHocPower post_hoc_power(double observed_p, double n_per_group,
                            double alpha, DesignTails tails,
                            DesignVariant variant);

}  // namespace pvalkit::design

#endif  // PVALKIT_DESIGN_HPP
