#include "pvalkit/design.hpp"

#include <cmath>
#include <stdexcept>

#include "pvalkit/detail/numerics.hpp"
#include "pvalkit/dist.hpp"

namespace pvalkit::design {

namespace {

constexpr double kMinN = 1.0 + 1e-6;  // keeps df > 0 for both variants

void validate_query(const DesignQuery& q) {
  if (!std::isfinite(q.std_effect))
    throw std::domain_error("std_effect must be finite");
  if (!(q.alpha > 0.0 && q.alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
  if (!(q.n_per_group > 1.0) || !std::isfinite(q.n_per_group))
    throw std::domain_error("n_per_group must exceed 1");
}

}  // namespace

std::string to_string(DesignTails t) {
  return t == DesignTails::one ? "one" : "two";
}

std::string to_string(DesignVariant v) {
  return v == DesignVariant::two_sample ? "two-sample" : "one-sample";
}

DesignTails design_tails_from_string(const std::string& s) {
  if (s == "one") return DesignTails::one;
  if (s == "two") return DesignTails::two;
  throw std::invalid_argument("unknown tails: " + s);
}

DesignVariant design_variant_from_string(const std::string& s) {
  if (s == "two-sample") return DesignVariant::two_sample;
  if (s == "one-sample") return DesignVariant::one_sample;
  throw std::invalid_argument("unknown design variant: " + s);
}

double noncentrality(double std_effect, double n_per_group,
                     DesignVariant variant) {
  const double factor = variant == DesignVariant::two_sample
                            ? std::sqrt(0.5 * n_per_group)
                            : std::sqrt(n_per_group);
  return std_effect * factor;
}

double noncentrality_unequal(double std_effect, double n1, double n2) {
  return std_effect * std::sqrt(n1 * n2 / (n1 + n2));
}

double degrees_of_freedom(double n_per_group, DesignVariant variant) {
  return variant == DesignVariant::two_sample ? 2.0 * n_per_group - 2.0
                                              : n_per_group - 1.0;
}

namespace {

// Rejection probability with the one-tailed region fixed in the upper
// direction; a negative effect therefore lands below alpha.
double power_signed(double std_effect, double n, double alpha,
                    DesignTails tails, DesignVariant variant) {
  const double df = degrees_of_freedom(n, variant);
  const double ncp = noncentrality(std_effect, n, variant);
  if (tails == DesignTails::one) {
    const double t_crit = dist::t_quantile(1.0 - alpha, df);
    return 1.0 - dist::nct_cdf(t_crit, df, ncp);
  }
  const double t_crit = dist::t_quantile(1.0 - 0.5 * alpha, df);
  return (1.0 - dist::nct_cdf(t_crit, df, ncp)) +
         dist::nct_cdf(-t_crit, df, ncp);
}

}  // namespace

double power(const DesignQuery& q) {
  validate_query(q);
  // a one-tailed design aims the rejection region at the alternative, so
  // power is a function of the effect magnitude
  return power_signed(std::fabs(q.std_effect), q.n_per_group, q.alpha,
                      q.tails, q.variant);
}

double solve_n(double std_effect, double alpha, double power_target,
               DesignTails tails, DesignVariant variant) {
  if (!(power_target > 0.0 && power_target < 1.0))
    throw std::domain_error("power target must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0, 1)");
  if (std_effect == 0.0 || !std::isfinite(std_effect))
    throw std::domain_error("std_effect must be nonzero and finite");
  if (power_target <= alpha)
    throw std::domain_error(
        "infeasible target: power cannot be pushed below alpha by sample "
        "size");

  auto f = [&](double n) {
    return power({std_effect, n, alpha, tails, variant}) - power_target;
  };
  double lo = kMinN + 0.02;  // evaluating at df ~ 4e-2 is safe and cheap
  double f_lo = f(lo);
  if (f_lo >= 0.0) return lo;  // target already met at the smallest usable n

  double hi = 4.0, f_hi = f(hi);
  int guard = 0;
  while (f_hi < 0.0) {
    if (++guard > 60)
      throw NumericalError("solve_n", "no finite n reaches the target", hi,
                           guard);
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = f(hi);
  }
  return detail::solve_bracketed(f, {lo, hi, f_lo, f_hi}, 1e-9, 1e-10, 200,
                                 "solve_n");
}

long solve_n_rounded(double std_effect, double alpha, double power_target,
                     DesignTails tails, DesignVariant variant) {
  const double n = solve_n(std_effect, alpha, power_target, tails, variant);
  return static_cast<long>(std::ceil(n - 1e-9));
}

CurveTable power_curve(const std::vector<double>& n_list,
                       const std::vector<double>& effect_grid, double alpha,
                       DesignTails tails) {
  if (n_list.empty() || effect_grid.empty())
    throw std::invalid_argument("power_curve: grids must be nonempty");
  CurveTable table;
  table.kind = CurveKind::power;
  table.alpha = alpha;
  table.tails = tails;
  table.n_list = n_list;
  table.effect_grid = effect_grid;
  table.values.reserve(n_list.size());
  for (double n : n_list) {
    std::vector<double> row;
    row.reserve(effect_grid.size());
    for (double effect : effect_grid)
      row.push_back(power({effect, n, alpha, tails, DesignVariant::two_sample}));
    table.values.push_back(std::move(row));
  }
  return table;
}

double p_quantile(double q, double n_per_group, double std_effect,
                  DesignVariant variant) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("p_quantile requires q in (0, 1)");
  if (!(n_per_group > 1.0))
    throw std::domain_error("n_per_group must exceed 1");
  const double df = degrees_of_freedom(n_per_group, variant);
  const double ncp = noncentrality(std_effect, n_per_group, variant);
  const double t_q = dist::nct_quantile(1.0 - q, df, ncp);
  // one-tailed upper P = P(T >= t); its q-quantile maps through the central
  // CDF of the (1-q)-quantile of the alternative's t distribution
  return dist::t_cdf(-t_q, df);
}

double p_mean(double n_per_group, double std_effect, DesignVariant variant) {
  if (!(n_per_group > 1.0))
    throw std::domain_error("n_per_group must exceed 1");
  auto quantile_ext = [&](double q) {
    if (q <= 0.0) return 0.0;  // inf of the P distribution's support
    if (q >= 1.0) return 1.0;
    return p_quantile(q, n_per_group, std_effect, variant);
  };
  return detail::adaptive_simpson(quantile_ext, 0.0, 1.0, 1e-7, 1e-9, "p_mean");
}

CurveTable p_quantile_curve(double q, const std::vector<double>& n_list,
                            const std::vector<double>& effect_grid) {
  if (n_list.empty() || effect_grid.empty())
    throw std::invalid_argument("p_quantile_curve: grids must be nonempty");
  CurveTable table;
  table.kind = CurveKind::p_quantile;
  table.q = q;
  table.n_list = n_list;
  table.effect_grid = effect_grid;
  for (double n : n_list) {
    std::vector<double> row;
    row.reserve(effect_grid.size());
    for (double effect : effect_grid) row.push_back(p_quantile(q, n, effect));
    table.values.push_back(std::move(row));
  }
  return table;
}

CurveTable p_mean_curve(const std::vector<double>& n_list,
                        const std::vector<double>& effect_grid) {
  if (n_list.empty() || effect_grid.empty())
    throw std::invalid_argument("p_mean_curve: grids must be nonempty");
  CurveTable table;
  table.kind = CurveKind::p_mean;
  table.n_list = n_list;
  table.effect_grid = effect_grid;
  for (double n : n_list) {
    std::vector<double> row;
    row.reserve(effect_grid.size());
    for (double effect : effect_grid) row.push_back(p_mean(n, effect));
    table.values.push_back(std::move(row));
  }
  return table;
}

PostHocPower post_hoc_power(double observed_p, double n_per_group,
                            double alpha, DesignTails tails,
                            DesignVariant variant) {
  if (!(observed_p > 0.0 && observed_p < 1.0))
    throw std::domain_error("observed_p must lie in (0, 1)");
  const double df = degrees_of_freedom(n_per_group, variant);
  // invert the observed one-tailed P (or two-tailed via its half) to the
  // observed t, then read off the implied standardized effect
  const double tail_p =
      tails == DesignTails::one ? observed_p : 0.5 * observed_p;
  const double t_obs = dist::t_quantile(1.0 - tail_p, df);
  const double d_obs = t_obs / noncentrality(1.0, n_per_group, variant);

  PostHocPower result;
  result.observed_effect = d_obs;
  // signed: an observed effect pointing away from the rejection region
  // keeps power below alpha rather than re-aiming the test at it
  result.value = power_signed(d_obs, n_per_group, alpha, tails, variant);
  result.warning =
      "post-experiment power is a one-to-one transform of the observed "
      "P-value: a large P always maps to low power at the observed effect, "
      "so this number adds nothing to the P-value and must not be used to "
      "reinterpret the result; use power analysis for design only";
  return result;
}

}  // namespace pvalkit::design
