#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dressed/dynamics.hpp"
#include "dressed/errors.hpp"

namespace dressed {

namespace {

constexpr double kPi = std::numbers::pi;
using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Piecewise {
  double value = 0.0;
  double error = 0.0;
};

// Euler-averaged limit of the trailing partial sums: repeated pairwise
// averaging of up to `depth` consecutive partial sums.
double euler_limit(const std::vector<double>& partial, std::size_t depth) {
  const std::size_t m = std::min(depth, partial.size());
  std::vector<double> level(partial.end() - static_cast<std::ptrdiff_t>(m), partial.end());
  while (level.size() > 1) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  return level.front();
}

}  // namespace

double g_integral(double t, double omega_bar, double g, const QuadratureConfig& quad) {
  if (!(t >= 0.0)) throw InvalidArgument("g_integral needs t >= 0");
  if (!(omega_bar > 0.0) || !(g > 0.0)) throw InvalidArgument("g_integral needs omega_bar, g > 0");
  if (t == 0.0) return 0.0;

  const double wb_sq = omega_bar * omega_bar;
  auto integrand = [&](double x) {
    const double x_sq = x * x;
    const double d = x_sq - wb_sq;
    return x_sq * std::sin(x * t) / (d * d + 4.0 * g * g * x_sq);
  };
  // The integral is scaled by 4g/pi at the end; target the unscaled tolerance.
  const double tol = quad.abs_tol * kPi / (4.0 * g);
  const double half_period = kPi / t;

  Piecewise head;
  auto integrate = [&](double lo, double hi, Piecewise& acc) {
    double err = 0.0;
    acc.value += Kronrod::integrate(integrand, lo, hi, 6, 1e-11, &err);
    acc.error += err;
  };
  const double split = omega_bar + 10.0 * g;
  const double breaks[] = {0.0, omega_bar, split};
  for (int seg = 0; seg < 2; ++seg) {
    const double lo = breaks[seg];
    const double hi = breaks[seg + 1];
    const auto pieces = static_cast<std::size_t>(std::ceil((hi - lo) / half_period));
    const double width = (hi - lo) / static_cast<double>(std::max<std::size_t>(pieces, 1));
    for (std::size_t i = 0; i < std::max<std::size_t>(pieces, 1); ++i) {
      integrate(lo + width * static_cast<double>(i), lo + width * static_cast<double>(i + 1), head);
    }
  }

  // Up to the first zero of sin(xt) beyond the split point.
  const double first_zero = std::ceil(split / half_period) * half_period;
  if (first_zero > split) integrate(split, first_zero, head);

  // Alternating tail: one term per half period.
  std::vector<double> partial;
  partial.reserve(256);
  double sum = 0.0;
  double previous_estimate = 0.0;
  bool have_estimate = false;
  Piecewise tail;
  for (std::size_t j = 0; j < quad.max_half_periods; ++j) {
    Piecewise term;
    const double lo = first_zero + static_cast<double>(j) * half_period;
    integrate(lo, lo + half_period, term);
    tail.error += term.error;
    sum += term.value;
    partial.push_back(sum);
    if (partial.size() >= 16 && partial.size() % 4 == 0) {
      const double estimate = euler_limit(partial, 16);
      if (have_estimate && std::fabs(estimate - previous_estimate) < 0.1 * tol) {
        if (head.error + tail.error > tol) {
          throw QuadratureFailure("G integral quadrature error estimate " +
                                  std::to_string(head.error + tail.error) + " above tolerance");
        }
        return -(4.0 * g / kPi) * (head.value + estimate);
      }
      previous_estimate = estimate;
      have_estimate = true;
    }
  }
  throw QuadratureFailure("G integral tail did not converge within " +
                          std::to_string(quad.max_half_periods) + " half periods at t = " +
                          std::to_string(t));
}

}  // namespace dressed
