#include "dressed/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dressed/errors.hpp"

namespace dressed {

namespace {

constexpr double kPi = std::numbers::pi;

void require_small_cavity(double delta, double threshold) {
  if (!(delta < threshold)) {
    throw RegimeViolation("small-cavity formulas need delta < " + std::to_string(threshold) +
                          ", got " + std::to_string(delta));
  }
}

void require_row(const TransformMatrix& tm, Oscillator mu) {
  if (mu.index() >= tm.size()) {
    throw InvalidArgument("oscillator index " + std::to_string(mu.index()) + " outside an N = " +
                          std::to_string(tm.size() - 1) + " system");
  }
}

Complex phase(double omega, double t) { return {std::cos(omega * t), -std::sin(omega * t)}; }

}  // namespace

std::string_view to_string(AmplitudeMethod method) {
  switch (method) {
    case AmplitudeMethod::discrete_sum: return "discrete-sum";
    case AmplitudeMethod::free_space_closed_form: return "free-space-closed-form";
    case AmplitudeMethod::small_cavity_series: return "small-cavity-series";
  }
  return "unknown";
}

FreeSpaceParams::FreeSpaceParams(double omega_bar, double g) : omega_bar_(omega_bar), g_(g) {
  if (!(omega_bar > 0.0) || !(g > 0.0)) throw InvalidArgument("omega_bar and g must be positive");
  const double kappa_sq = omega_bar * omega_bar - g * g;
  if (!(kappa_sq > 0.0)) {
    throw RegimeViolation("free-space closed form needs kappa^2 = omega_bar^2 - g^2 > 0");
  }
  kappa_ = std::sqrt(kappa_sq);
}

Complex amplitude_discrete(const TransformMatrix& tm, Oscillator mu, Oscillator nu, double t) {
  require_row(tm, mu);
  require_row(tm, nu);
  const auto& t_mat = tm.matrix();
  const auto& bigomegas = tm.spectrum().bigomegas();
  const auto m = static_cast<Eigen::Index>(mu.index());
  const auto n = static_cast<Eigen::Index>(nu.index());
  Complex sum = 0.0;
  for (Eigen::Index s = 0; s < t_mat.cols(); ++s) {
    sum += t_mat(m, s) * t_mat(n, s) * phase(bigomegas[static_cast<std::size_t>(s)], t);
  }
  return sum;
}

std::vector<Complex> amplitude_row(const TransformMatrix& tm, Oscillator mu, double t) {
  require_row(tm, mu);
  const auto& t_mat = tm.matrix();
  const auto& bigomegas = tm.spectrum().bigomegas();
  const auto m = static_cast<Eigen::Index>(mu.index());
  // weights_s = t_mu^s exp(-i Omega_s t); row_nu = sum_s t_nu^s weights_s
  Eigen::VectorXcd weights(t_mat.cols());
  for (Eigen::Index s = 0; s < t_mat.cols(); ++s) {
    weights(s) = t_mat(m, s) * phase(bigomegas[static_cast<std::size_t>(s)], t);
  }
  const Eigen::VectorXcd row = t_mat.cast<Complex>() * weights;
  return {row.data(), row.data() + row.size()};
}

Complex survival_amplitude(const AtomRow& row, double t) {
  Complex sum = 0.0;
  for (std::size_t r = 0; r < row.weights.size(); ++r) sum += row.weights[r] * phase(row.bigomegas[r], t);
  return sum;
}

Complex amplitude_free_space(const FreeSpaceParams& p, double t, const QuadratureConfig& quad) {
  if (!(t >= 0.0)) throw InvalidArgument("amplitude_free_space needs t >= 0");
  const double g = p.g();
  const double k = p.kappa();
  const double re = std::exp(-g * t) * (std::cos(k * t) - g / k * std::sin(k * t));
  return {re, g_integral(t, p.omega_bar(), g, quad)};
}

double f00_sq_large_time(double t, double omega_bar, double g) {
  if (!(t > 0.0)) throw InvalidArgument("f00_sq_large_time needs t > 0");
  const double osc = std::cos(omega_bar * t) - g / omega_bar * std::sin(omega_bar * t);
  const double wb4 = omega_bar * omega_bar * omega_bar * omega_bar;
  return std::exp(-2.0 * g * t) * osc * osc + 64.0 * g * g / (wb4 * wb4 * std::pow(t, 6));
}

Complex amplitude_small_cavity(double t, const DressedAtomParams& params, std::size_t k_max,
                               double delta_threshold) {
  require_small_cavity(params.delta(), delta_threshold);
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
  const double delta = params.delta();
  const double atom_sq = 1.0 / (1.0 + 2.0 * kPi * delta / 3.0);
  const double omega0 = params.omega_bar() * (1.0 - kPi * delta / 3.0);
  const double scale = params.g() / delta;
  Complex field = 0.0;
  for (std::size_t k = k_max; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    field += phase(scale * (kk + 2.0 * delta / (kPi * kk)), t) / (kk * kk);
  }
  return atom_sq * (phase(omega0, t) + 4.0 * delta / kPi * field);
}

SeriesValue f00_sq_small_cavity(double t, const DressedAtomParams& params, std::size_t k_max,
                                double delta_threshold) {
  require_small_cavity(params.delta(), delta_threshold);
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
  const double delta = params.delta();
  const double pref = 1.0 / ((1.0 + 2.0 * kPi * delta / 3.0) * (1.0 + 2.0 * kPi * delta / 3.0));
  const double omega0 = params.omega_bar() * (1.0 - kPi * delta / 3.0);
  const double scale = params.g() / delta;

  // Single sum: sum_k cos[(Omega_0 - Omega_k) t] / k^2.
  // Double sum: sum_{k,l} cos[(Omega_k - Omega_l) t] / (k^2 l^2) = |sum_k exp(-i Omega_k t) / k^2|^2,
  // with Omega_k - Omega_l = (g/delta - 2g/(pi k l))(k - l) for the leading-order roots.
  double single = 0.0;
  Complex field = 0.0;
  for (std::size_t k = k_max; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    const double omega_k = scale * (kk + 2.0 * delta / (kPi * kk));
    single += std::cos((omega0 - omega_k) * t) / (kk * kk);
    field += phase(omega_k, t) / (kk * kk);
  }
  const double value =
      pref * (1.0 + 8.0 * delta / kPi * single + 16.0 * delta * delta / (kPi * kPi) * std::norm(field));

  // sum_{k > K} 1/k^2 < 1/K
  const double kk = static_cast<double>(k_max);
  const double tail = 1.0 / kk;
  const double zeta2 = kPi * kPi / 6.0;
  const double tail_bound =
      pref * (8.0 * delta / kPi * tail + 16.0 * delta * delta / (kPi * kPi) * (2.0 * zeta2 * tail + tail * tail));
  return {value, tail_bound};
}

double f00_sq_lower_bound(double delta, double delta_threshold) {
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
  require_small_cavity(delta, delta_threshold);
  const double a = 1.0 + 2.0 * kPi * delta / 3.0;
  return (1.0 - 4.0 * kPi * delta / 3.0 - 4.0 * kPi * kPi * delta * delta / 9.0) / (a * a);
}

AmplitudeTrace trace_discrete(const TransformMatrix& tm, Oscillator mu, Oscillator nu,
                              std::span<const double> times) {
  AmplitudeTrace trace{{times.begin(), times.end()}, {}, mu, nu, AmplitudeMethod::discrete_sum};
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(amplitude_discrete(tm, mu, nu, t));
  return trace;
}

AmplitudeTrace trace_free_space(const FreeSpaceParams& p, std::span<const double> times,
                                const QuadratureConfig& quad) {
  AmplitudeTrace trace{{times.begin(), times.end()}, {}, Oscillator::atom(), Oscillator::atom(),
                       AmplitudeMethod::free_space_closed_form};
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(amplitude_free_space(p, t, quad));
  return trace;
}

AmplitudeTrace trace_small_cavity(const DressedAtomParams& params, std::span<const double> times,
                                  std::size_t k_max, double delta_threshold) {
  AmplitudeTrace trace{{times.begin(), times.end()}, {}, Oscillator::atom(), Oscillator::atom(),
                       AmplitudeMethod::small_cavity_series};
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(amplitude_small_cavity(t, params, k_max, delta_threshold));
  return trace;
}

std::vector<double> time_grid(double t_max, std::size_t steps) {
  if (steps == 1) return {0.0};
  if (!(t_max > 0.0) || steps < 2) throw InvalidArgument("time grid needs t_max > 0 and steps >= 2");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

}  // namespace dressed
