#include "pvalkit/ttest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pvalkit/detail/numerics.hpp"
#include "pvalkit/dist.hpp"

namespace pvalkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_summary(const SampleSummary& s, const char* which) {
  if (s.n < 2)
    throw std::invalid_argument(std::string(which) +
                                ": at least 2 observations required");
  if (!std::isfinite(s.mean) || !std::isfinite(s.sd) || s.sd < 0.0)
    throw std::invalid_argument(std::string(which) +
                                ": mean must be finite and sd nonnegative");
}

// One-tailed p in the "greater" direction with full tail precision:
// P(T >= t) = t_cdf(-t, df) by symmetry, avoiding 1 - cdf cancellation.
double p_from_t(double t, double df, Tails tails) {
  const double p_greater = dist::t_cdf(-t, df);
  switch (tails) {
    case Tails::one_greater:
      return p_greater;
    case Tails::one_less:
      return 1.0 - p_greater;
    case Tails::two:
      return 2.0 * std::fmin(p_greater, 1.0 - p_greater);
  }
  throw std::logic_error("unreachable tails value");
}

double limit_p(double effect, Tails tails) {
  const bool rejects = (tails == Tails::two) ||
                       (tails == Tails::one_greater && effect > 0.0) ||
                       (tails == Tails::one_less && effect < 0.0);
  return rejects ? 0.0 : 1.0;
}

}  // namespace

std::string to_string(Tails tails) {
  switch (tails) {
    case Tails::one_greater:
      return "one-greater";
    case Tails::one_less:
      return "one-less";
    case Tails::two:
      return "two";
  }
  return "?";
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::two_sample_pooled:
      return "pooled";
    case Variant::two_sample_welch:
      return "welch";
    case Variant::one_sample:
      return "one-sample";
  }
  return "?";
}

Tails tails_from_string(const std::string& s) {
  if (s == "one" || s == "greater" || s == "one-greater")
    return Tails::one_greater;
  if (s == "less" || s == "one-less") return Tails::one_less;
  if (s == "two") return Tails::two;
  throw std::invalid_argument("unknown tails: " + s);
}

Variant variant_from_string(const std::string& s) {
  if (s == "pooled") return Variant::two_sample_pooled;
  if (s == "welch") return Variant::two_sample_welch;
  if (s == "one-sample") return Variant::one_sample;
  throw std::invalid_argument("unknown variant: " + s);
}

SampleSummary summarize(std::span<const double> data) {
  if (data.size() < 2)
    throw std::invalid_argument("summarize: at least 2 observations required");
  double sum = 0.0;
  for (double v : data) {
    if (!std::isfinite(v))
      throw std::invalid_argument("summarize: all values must be finite");
    sum += v;
  }
  const double mean = sum / static_cast<double>(data.size());
  double ss = 0.0;
  for (double v : data) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(data.size() - 1));
  return {data.size(), mean, sd};
}

TTestResult t_test(const SampleSummary& g1, const SampleSummary& g2,
                   const TestSpec& spec) {
  if (spec.variant == Variant::one_sample)
    throw std::invalid_argument("one-sample test takes a single group");
  validate_summary(g1, "group 1");
  validate_summary(g2, "group 2");
  if (!std::isfinite(spec.null_delta))
    throw std::invalid_argument("null_delta must be finite");

  const double n1 = static_cast<double>(g1.n);
  const double n2 = static_cast<double>(g2.n);
  const double v1 = g1.sd * g1.sd;
  const double v2 = g2.sd * g2.sd;

  TTestResult r;
  r.tails = spec.tails;
  r.variant = spec.variant;
  r.mean_diff = g1.mean - g2.mean;

  if (spec.variant == Variant::two_sample_pooled) {
    const double sp2 = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / (n1 + n2 - 2.0);
    const double sp = std::sqrt(sp2);
    r.pooled_sd = sp;
    r.df = n1 + n2 - 2.0;
    r.se = sp * std::sqrt(1.0 / n1 + 1.0 / n2);
    r.cohen_d = r.mean_diff / sp;
  } else {
    r.df = 0.0;  // set below
    const double se2 = v1 / n1 + v2 / n2;
    r.se = std::sqrt(se2);
    if (se2 > 0.0) {
      // Welch–Satterthwaite degrees of freedom
      r.df = se2 * se2 /
             ((v1 / n1) * (v1 / n1) / (n1 - 1.0) +
              (v2 / n2) * (v2 / n2) / (n2 - 1.0));
    }
    r.cohen_d = r.mean_diff / std::sqrt(0.5 * (v1 + v2));
  }

  const double effect = r.mean_diff - spec.null_delta;
  if (r.se == 0.0) {
    if (effect == 0.0)
      throw std::domain_error(
          "t statistic undefined: zero scale and zero effect");
    r.degenerate_scale = true;
    r.t = effect > 0.0 ? kInf : -kInf;
    r.cohen_d = effect > 0.0 ? kInf : -kInf;
    if (spec.variant == Variant::two_sample_welch)
      r.df = n1 + n2 - 2.0;  // nominal; statistic is already degenerate
    r.p = limit_p(effect, spec.tails);
    return r;
  }

  r.t = effect / r.se;
  r.p = p_from_t(r.t, r.df, spec.tails);
  return r;
}

TTestResult t_test(const SampleSummary& g1, const TestSpec& spec) {
  if (spec.variant != Variant::one_sample)
    throw std::invalid_argument("two-sample test requires two groups");
  validate_summary(g1, "group");
  if (!std::isfinite(spec.null_delta))
    throw std::invalid_argument("null_delta must be finite");

  TTestResult r;
  r.tails = spec.tails;
  r.variant = spec.variant;
  r.mean_diff = g1.mean - spec.null_delta;
  r.df = static_cast<double>(g1.n) - 1.0;
  r.se = g1.sd / std::sqrt(static_cast<double>(g1.n));

  if (r.se == 0.0) {
    if (r.mean_diff == 0.0)
      throw std::domain_error(
          "t statistic undefined: zero scale and zero effect");
    r.degenerate_scale = true;
    r.t = r.mean_diff > 0.0 ? kInf : -kInf;
    r.cohen_d = r.t;
    r.p = limit_p(r.mean_diff, spec.tails);
    return r;
  }

  r.t = r.mean_diff / r.se;
  r.cohen_d = r.mean_diff / g1.sd;
  r.p = p_from_t(r.t, r.df, spec.tails);
  return r;
}

PseudoDataFit fit_pseudo_data(std::span<const double> control, std::size_t n,
                              double target_p, const TestSpec& spec) {
  if (!(target_p > 0.0 && target_p < 1.0))
    throw std::domain_error("fit_pseudo_data requires 0 < target_p < 1");
  if (spec.variant == Variant::one_sample)
    throw std::invalid_argument("fit_pseudo_data needs a two-sample spec");
  if (control.size() != n)
    throw std::invalid_argument("control must have exactly n observations");

  const SampleSummary ctrl = summarize(control);
  if (ctrl.sd == 0.0)
    throw std::domain_error(
        "fit_pseudo_data: constant control cannot reach a target P");

  // The test compares (treatment = control + c) against control; shifting
  // leaves both sds unchanged, so p is a monotone function of c on the
  // solved branch. Two-tailed targets resolve on the upward-shift branch.
  auto p_of_shift = [&](double c) {
    SampleSummary treat = ctrl;
    treat.mean = ctrl.mean + c;
    return t_test(treat, ctrl, spec).p;
  };
  const double dir = (spec.tails == Tails::one_less) ? -1.0 : 1.0;
  auto f = [&](double u) { return target_p - p_of_shift(spec.null_delta + dir * u); };
  const double scale = ctrl.sd * std::sqrt(2.0 / static_cast<double>(n));
  detail::Bracket br;
  if (spec.tails == Tails::two) {
    // p(u) is symmetric about u = 0 (where it equals 1), so solve on the
    // upward branch only; f(0) = target - 1 < 0 keeps the bracket there.
    br = detail::expand_monotone(f, scale, scale, 2.0, 400, "fit_pseudo_data");
  } else {
    // one-tailed p is monotone in u over the whole line
    br = detail::expand_monotone(f, 0.0, scale, 2.0, 400, "fit_pseudo_data");
  }
  const double u = detail::solve_bracketed(f, br, 1e-12, 1e-13, 300,
                                           "fit_pseudo_data");
  const double shift = spec.null_delta + dir * u;

  PseudoDataFit fit;
  fit.control.assign(control.begin(), control.end());
  fit.treatment.reserve(n);
  for (double v : control) fit.treatment.push_back(v + shift);
  fit.shift = shift;
  fit.achieved_p =
      t_test(summarize(fit.treatment), summarize(fit.control), spec).p;
  return fit;
}

}  // namespace pvalkit
