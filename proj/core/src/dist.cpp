#include "pvalkit/dist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pvalkit/detail/numerics.hpp"
#include "pvalkit/errors.hpp"

namespace pvalkit::dist {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kSqrt2OverPi = 0.7978845608028653559;

constexpr double kSeriesTol = 1e-12;  // absolute stop for the nct series
constexpr long kSeriesMaxIter = 20000;
constexpr double kSeriesNcpLimit = 20.0;  // beyond this, integrate instead

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace

void DistParams::validate() const {
  if (!(df > 0.0) || !std::isfinite(df))
    throw std::domain_error("degrees of freedom must be positive and finite");
  require_finite(ncp, "noncentrality parameter");
}

double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("ln_gamma requires finite x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant; sign is +1 for x > 0
}

double ln_beta(double a, double b) {
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cont_frac(double a, double b, double x) {
  constexpr double eps = 1e-16;
  constexpr double tiny = 1e-300;
  constexpr int max_iter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw NumericalError("reg_inc_beta", "continued fraction did not converge",
                       h, max_iter);
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("reg_inc_beta requires a > 0 and b > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("reg_inc_beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double ln_front =
      a * std::log(x) + b * std::log1p(-x) - ln_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(ln_front) * beta_cont_frac(a, b, x) / a;
  return 1.0 - std::exp(ln_front) * beta_cont_frac(b, a, 1.0 - x) / b;
}

double norm_cdf(double z) {
  if (std::isnan(z)) throw std::domain_error("norm_cdf requires a real z");
  return 0.5 * std::erfc(-z / kSqrt2);
}

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("norm_quantile requires p in (0, 1)");

  // Wichura's PPND16 rational approximations.
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
              3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
            4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
            2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
            5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-9) * r +
                1.84631831751005468180e-6) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -val : val;
}

double t_cdf(double t, double df) {
  DistParams{df, 0.0}.validate();
  if (std::isnan(t)) throw std::domain_error("t_cdf requires a real t");
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  if (t == 0.0) return 0.5;

  const double half_tail = 0.5 * reg_inc_beta(0.5 * df, 0.5, df / (df + t * t));
  return t > 0.0 ? 1.0 - half_tail : half_tail;
}

double t_quantile(double p, double df) {
  DistParams{df, 0.0}.validate();
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("t_quantile requires p in (0, 1)");
  if (p == 0.5) return 0.0;

  // solve on the upper half and reflect; the root is nonnegative there so
  // the bracket walks upward from 0
  const double pp = p > 0.5 ? p : 1.0 - p;
  auto f = [df, pp](double x) { return t_cdf(x, df) - pp; };
  const double guess = std::fmax(norm_quantile(pp), 0.5);
  auto br = detail::expand_monotone(f, guess, guess, 2.0, 400, "t_quantile");
  const double x = detail::solve_bracketed(f, br, 5e-14, 1e-12, 200,
                                           "t_quantile");
  return p > 0.5 ? x : -x;
}

namespace {

// Tail sum of the noncentral t CDF for t > 0: with x = t^2/(t^2+df) and
// b = df/2,
//   sum_j 0.5 * [ p_j I_x(j+1/2, b) + q_j I_x(j+1, b) ]
// where p_j are Poisson(lambda) weights with lambda = del^2/2 and
// q_j = e^-lambda del lambda^j / (sqrt(2) Gamma(j+3/2)). Incomplete beta
// values follow the recurrence I_x(a+1,b) = I_x(a,b) - x^a(1-x)^b/(a B(a,b)).
// The truncation bound uses the residual Poisson mass times the current
// (decreasing-in-a) beta term.
double nct_series_tail(double x, double df, double del) {
  const double lambda = 0.5 * del * del;
  const double b = 0.5 * df;
  const double lx = std::log(x);
  const double l1mx = std::log1p(-x);

  double p = std::exp(-lambda);
  double q = del * std::exp(-lambda) * kSqrt2OverPi;
  if (p == 0.0 && q == 0.0)
    throw NumericalError("nct_cdf", "Poisson weights underflow", 0.0, 0);

  double i_odd = reg_inc_beta(0.5, b, x);
  double t_odd = 2.0 * std::exp(0.5 * lx + b * l1mx - ln_beta(0.5, b));
  double i_even = -std::expm1(b * l1mx);
  double t_even = b * std::exp(lx + b * l1mx);

  const double q_total_abs = std::erf(std::fabs(del) / kSqrt2);
  double a_odd = 0.5, a_even = 1.0;
  double sum = 0.0, p_cum = 0.0, q_cum_abs = 0.0;

  for (long j = 0; j < kSeriesMaxIter; ++j) {
    sum += 0.5 * (p * i_odd + q * i_even);
    p_cum += p;
    q_cum_abs += std::fabs(q);

    i_odd = std::fmax(i_odd - t_odd, 0.0);
    t_odd *= x * (a_odd + b) / (a_odd + 1.0);
    a_odd += 1.0;
    i_even = std::fmax(i_even - t_even, 0.0);
    t_even *= x * (a_even + b) / (a_even + 1.0);
    a_even += 1.0;

    const double remaining =
        std::fmax(0.5 * ((1.0 - p_cum) + (q_total_abs - q_cum_abs)), 0.0);
    if (remaining * i_odd <= kSeriesTol) return sum;

    p *= lambda / (j + 1.0);
    q *= lambda / (j + 1.5);
  }
  throw NumericalError("nct_cdf", "series did not converge", sum,
                       kSeriesMaxIter);
}

// P(T <= t) = E_{V ~ chi2_df}[ Phi(t sqrt(V/df) - ncp) ], integrated in
// s = ln v so the v^(df/2 - 1) factor stays regular near zero.
double nct_cdf_quadrature(double t, double df, double ncp) {
  auto log_weight = [df](double s) {
    return 0.5 * df * s - 0.5 * std::exp(s) - 0.5 * df * kLn2 -
           ln_gamma(0.5 * df);
  };
  const double s_peak = std::log(df);
  const double cutoff = log_weight(s_peak) - 46.0;  // e^-46 ~ 1e-20 tails

  double s_lo = s_peak - 2.0;
  int guard = 0;
  while (log_weight(s_lo) > cutoff) {
    s_lo -= 2.0;
    if (++guard > 2000)
      throw NumericalError("nct_cdf", "quadrature lower bound search failed",
                           s_lo, guard);
  }
  double s_hi = s_peak + 2.0;
  guard = 0;
  while (log_weight(s_hi) > cutoff) {
    s_hi += 2.0;
    if (++guard > 2000)
      throw NumericalError("nct_cdf", "quadrature upper bound search failed",
                           s_hi, guard);
  }

  const double root_df = std::sqrt(df);
  auto integrand = [&](double s) {
    const double scale = std::exp(0.5 * s) / root_df;  // sqrt(v/df)
    return norm_cdf(t * scale - ncp) * std::exp(log_weight(s));
  };
  const double v = detail::adaptive_simpson(integrand, s_lo, s_hi, 1e-10, 1e-9 * (s_hi - s_lo),
                                            "nct_cdf");
  return std::fmin(std::fmax(v, 0.0), 1.0);
}

}  // namespace

double nct_cdf(double t, const DistParams& params) {
  params.validate();
  if (std::isnan(t)) throw std::domain_error("nct_cdf requires a real t");
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  if (params.ncp == 0.0) return t_cdf(t, params.df);
  if (std::fabs(params.ncp) > kSeriesNcpLimit)
    return nct_cdf_quadrature(t, params.df, params.ncp);

  // reflect so the series runs over the t >= 0 region
  double tt = t, del = params.ncp;
  bool flipped = false;
  if (t < 0.0) {
    tt = -t;
    del = -del;
    flipped = true;
  }
  double result = norm_cdf(-del);
  if (tt > 0.0) {
    const double x = tt * tt / (tt * tt + params.df);
    result += nct_series_tail(x, params.df, del);
  }
  result = std::fmin(std::fmax(result, 0.0), 1.0);
  return flipped ? 1.0 - result : result;
}

double nct_cdf(double t, double df, double ncp) {
  return nct_cdf(t, DistParams{df, ncp});
}

double nct_quantile(double p, const DistParams& params) {
  params.validate();
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("nct_quantile requires p in (0, 1)");

  auto f = [&params, p](double x) { return nct_cdf(x, params) - p; };
  // normal-location guess with a mild spread inflation for small df
  const double widen =
      params.df > 2.0 ? std::sqrt(params.df / (params.df - 2.0)) : 2.0;
  const double guess = params.ncp + widen * norm_quantile(p);
  const double step = std::fmax(1.0, 0.1 * std::fabs(guess));
  auto br = detail::expand_monotone(f, guess, step, 2.0, 400, "nct_quantile");
  return detail::solve_bracketed(f, br, 1e-10, 1e-11, 300, "nct_quantile");
}

double nct_quantile(double p, double df, double ncp) {
  return nct_quantile(p, DistParams{df, ncp});
}

}  // namespace pvalkit::dist
