#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace dressed {

struct BracketResult {
  double root;
  int iterations;
};

/// Brent's method on a bracket [lo, hi] whose endpoint values f_lo, f_hi
/// have opposite signs (or one of them is zero). Combines bisection with
/// secant and inverse quadratic steps, so each iteration at least halves
/// the bracket every second step.
///
/// Returns std::nullopt when max_iterations is exhausted.
template <class F>
std::optional<BracketResult> brent_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                                        int max_iterations) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  if (f_lo == 0.0) return BracketResult{lo, 0};
  if (f_hi == 0.0) return BracketResult{hi, 0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) return std::nullopt;

  double a = lo, b = hi, c = hi;
  double fa = f_lo, fb = f_hi, fc = f_hi;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::fabs(b) + tiny;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol || fb == 0.0) return BracketResult{b, iter};

    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (xm > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return std::nullopt;
}

}  // namespace dressed
