#ifndef PVALKIT_DETAIL_NUMERICS_HPP
#define PVALKIT_DETAIL_NUMERICS_HPP

#include <cmath>

#include "pvalkit/errors.hpp"

// Shared numeric machinery: bracketed root finding and adaptive quadrature.
// Everything here is deterministic and allocation-free.

namespace pvalkit::detail {

struct Bracket {
  double lo, hi, f_lo, f_hi;
};

// Bisection/secant hybrid on a bracket with f(lo) and f(hi) of opposite
// sign. Converges when |f| <= f_tol or the bracket width drops below
// x_tol * (1 + |x|). A secant step is used while it lands inside the
// bracket and keeps shrinking it; otherwise the step bisects.
template <class F>
double solve_bracketed(F&& f, Bracket br, double f_tol, double x_tol,
                       int max_iter, const char* routine) {
  double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw NumericalError(routine, "root not bracketed", a, 0);

  for (int it = 0; it < max_iter; ++it) {
    double width = b - a;
    double x = b - fb * width / (fb - fa);
    if (!(x > a && x < b)) x = a + 0.5 * width;
    double fx = f(x);
    if (std::fabs(fx) <= f_tol) return x;
    if ((fx > 0.0) == (fb > 0.0)) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    if ((b - a) > 0.75 * width) {
      // secant is stalling against one end; bisect once
      double xm = a + 0.5 * (b - a);
      double fm = f(xm);
      if (std::fabs(fm) <= f_tol) return xm;
      if ((fm > 0.0) == (fb > 0.0)) {
        b = xm;
        fb = fm;
      } else {
        a = xm;
        fa = fm;
      }
    }
    if ((b - a) <= x_tol * (1.0 + std::fabs(a) + std::fabs(b)))
      return a + 0.5 * (b - a);
  }
  throw NumericalError(routine, "root iteration cap exceeded",
                       a + 0.5 * (b - a), max_iter);
}

// Bracket search for monotone nondecreasing f: walks outward from the guess
// until f(lo) <= 0 <= f(hi).
template <class F>
Bracket expand_monotone(F&& f, double guess, double step, double grow,
                        int max_expand, const char* routine) {
  double lo = guess - step, hi = guess + step;
  double f_lo = f(lo), f_hi = f(hi);
  int used = 0;
  while (f_lo > 0.0) {
    if (++used > max_expand)
      throw NumericalError(routine, "bracket expansion failed (low side)", lo,
                           used);
    hi = lo;
    f_hi = f_lo;
    step *= grow;
    lo -= step;
    f_lo = f(lo);
  }
  while (f_hi < 0.0) {
    if (++used > max_expand)
      throw NumericalError(routine, "bracket expansion failed (high side)", hi,
                           used);
    lo = hi;
    f_lo = f_hi;
    step *= grow;
    hi += step;
    f_hi = f(hi);
  }
  return {lo, hi, f_lo, f_hi};
}

namespace quad_impl {

template <class F>
double simpson_step(F& f, double a, double m, double b, double fa, double fm,
                    double fb, double whole, double tol, double min_interval,
                    int depth, const char* routine) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  // boundary-layer floor: once the interval is this narrow, its whole
  // contribution is below tolerance for a bounded integrand
  if ((b - a) <= min_interval) return left + right + delta / 15.0;
  if (depth <= 0)
    throw NumericalError(routine, "quadrature failed to converge",
                         left + right, 0);
  return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, min_interval,
                      depth - 1, routine) +
         simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, min_interval,
                      depth - 1, routine);
}

}  // namespace quad_impl

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Subdivision stops at intervals of width min_interval; keep
// sup|f| * min_interval below tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol,
                        double min_interval, const char* routine) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return quad_impl::simpson_step(f, a, m, b, fa, fm, fb, whole, tol,
                                 min_interval, 80, routine);
}

}  // namespace pvalkit::detail

#endif  // PVALKIT_DETAIL_NUMERICS_HPP
