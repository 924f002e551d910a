#include "dressed/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dressed/errors.hpp"
#include "dressed/root_bracket.hpp"

namespace dressed {

namespace {

constexpr double kPi = std::numbers::pi;

struct SecularValue {
  double value;
  double scale;
};

// omegabar^2 - Omega^2 - eta^2 Omega^2 sum_k 1 / ((omega_k - Omega)(omega_k + Omega))
// at Omega = r dw + gap.
SecularValue secular(const DressedAtomParams& p, std::size_t r, double gap) {
  const double dw = p.delta_omega();
  const double omega = static_cast<double>(r) * dw + gap;
  const double omega_sq = omega * omega;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t k = 1; k <= p.n_modes(); ++k) {
    const double diff = (static_cast<double>(k) - static_cast<double>(r)) * dw - gap;
    const double term = 1.0 / (diff * (p.field_frequency(k) + omega));
    sum += term;
    abs_sum += std::fabs(term);
  }
  const double wb_sq = p.omega_bar() * p.omega_bar();
  return {wb_sq - omega_sq - p.eta_sq() * omega_sq * sum,
          wb_sq + omega_sq + p.eta_sq() * omega_sq * abs_sum};
}

double cavity_rhs(const DressedAtomParams& p, double omega) {
  const double dw = p.delta_omega();
  const double wb_sq = p.omega_bar() * p.omega_bar();
  return omega / (2.0 * p.g()) + dw / (kPi * omega) - wb_sq / (2.0 * p.g() * omega);
}

// cos(x) - sin(x) * rhs with x reduced to the offset angle inside interval r.
// The common factor (-1)^r is dropped, so the value is +1-ish at the lower
// asymptote and -1 at the upper one.
double cavity_pole_free(const DressedAtomParams& p, std::size_t r, double gap) {
  const double dw = p.delta_omega();
  if (r == 0 && gap == 0.0) {
    return kPi * p.omega_bar() * p.omega_bar() / (2.0 * p.g() * dw);
  }
  const double angle = kPi * gap / dw;
  const double omega = static_cast<double>(r) * dw + gap;
  return std::cos(angle) - std::sin(angle) * cavity_rhs(p, omega);
}

double solve_secular_root(const DressedAtomParams& p, std::size_t r, const RootConfig& config) {
  const double dw = p.delta_omega();
  const bool top = r == p.n_modes();
  auto f = [&](double gap) { return secular(p, r, gap).value; };

  double offset = config.initial_offset * dw;
  double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0;
  bool bracketed = false;
  for (int shrink = 0; shrink < 40 && !bracketed; ++shrink, offset /= 16.0) {
    lo = (r == 0) ? 0.0 : offset;
    f_lo = f(lo);
    if (top) {
      hi = dw;
      f_hi = f(hi);
      for (int grow = 0; grow < 60 && f_hi >= 0.0; ++grow) {
        hi *= 2.0;
        f_hi = f(hi);
      }
    } else {
      hi = dw - offset;
      f_hi = f(hi);
    }
    bracketed = f_lo > 0.0 && f_hi < 0.0;
  }
  if (!bracketed) {
    throw ConvergenceFailure("no sign change of the secular equation after asymptote shrinking", r);
  }
  const auto result = brent_root(f, lo, hi, f_lo, f_hi, config.max_iterations);
  if (!result) throw ConvergenceFailure("secular root did not converge", r);
  if (secular_residual(p, r, result->root) > config.residual_tol) {
    throw ConvergenceFailure("secular residual above tolerance", r);
  }
  return result->root;
}

double solve_cavity_root(const DressedAtomParams& p, std::size_t r, const RootConfig& config) {
  const double dw = p.delta_omega();
  auto f = [&](double gap) { return cavity_pole_free(p, r, gap); };
  const double f_lo = f(0.0);
  const double f_hi = f(dw);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw ConvergenceFailure("no sign change of the cavity equation", r);
  }
  const auto result = brent_root(f, 0.0, dw, f_lo, f_hi, config.max_iterations);
  if (!result) throw ConvergenceFailure("cavity root did not converge", r);
  const double rhs = cavity_rhs(p, static_cast<double>(r) * dw + result->root);
  if (std::fabs(closed_form_residual(p, r, result->root)) > config.residual_tol * (1.0 + std::fabs(rhs))) {
    throw ConvergenceFailure("cavity equation residual above tolerance", r);
  }
  return result->root;
}

}  // namespace

std::string_view to_string(SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::exact_roots: return "exact-roots";
    case SpectrumMethod::closed_form_roots: return "closed-form-roots";
    case SpectrumMethod::small_cavity_approx: return "small-cavity-approx";
    case SpectrumMethod::oracle: return "oracle";
  }
  return "unknown";
}

ModeSpectrum::ModeSpectrum(DressedAtomParams params, std::vector<double> gaps,
                           SpectrumMethod method)
    : params_(std::move(params)), gaps_(std::move(gaps)), method_(method) {
  if (gaps_.size() != params_.n_modes() + 1) {
    throw InvalidArgument("a spectrum needs exactly N+1 normal frequencies");
  }
  bigomegas_.reserve(gaps_.size());
  for (std::size_t r = 0; r < gaps_.size(); ++r) {
    const double omega = static_cast<double>(r) * params_.delta_omega() + gaps_[r];
    if (!(omega > 0.0)) throw DomainError("normal frequencies must be positive");
    if (r > 0 && !(omega > bigomegas_.back())) {
      throw DomainError("normal frequencies must be strictly increasing");
    }
    bigomegas_.push_back(omega);
  }
}

std::vector<double> ModeSpectrum::omegas() const { return field_frequencies(params_); }

std::vector<double> field_frequencies(const DressedAtomParams& params) {
  std::vector<double> out(params.n_modes());
  for (std::size_t k = 1; k <= params.n_modes(); ++k) out[k - 1] = params.field_frequency(k);
  return out;
}

ModeSpectrum solve_eigenfrequencies(const DressedAtomParams& params, const RootConfig& config) {
  std::vector<double> gaps(params.n_modes() + 1);
  for (std::size_t r = 0; r < gaps.size(); ++r) gaps[r] = solve_secular_root(params, r, config);
  return ModeSpectrum(params, std::move(gaps), SpectrumMethod::exact_roots);
}

ModeSpectrum solve_closed_form_eigenfrequencies(const DressedAtomParams& params,
                                                const RootConfig& config) {
  std::vector<double> gaps(params.n_modes() + 1);
  for (std::size_t r = 0; r < gaps.size(); ++r) gaps[r] = solve_cavity_root(params, r, config);
  return ModeSpectrum(params, std::move(gaps), SpectrumMethod::closed_form_roots);
}

ModeSpectrum approx_small_cavity_spectrum(const DressedAtomParams& params, double delta_threshold) {
  const double delta = params.delta();
  if (!(delta < delta_threshold)) {
    throw RegimeViolation("small-cavity formulas need delta < " + std::to_string(delta_threshold) +
                          ", got " + std::to_string(delta));
  }
  std::vector<double> gaps(params.n_modes() + 1);
  gaps[0] = params.omega_bar() * (1.0 - kPi * delta / 3.0);
  for (std::size_t k = 1; k < gaps.size(); ++k) {
    // (g/delta)(k + 2 delta/(pi k)) - k delta_omega
    gaps[k] = 2.0 * params.g() / (kPi * static_cast<double>(k));
  }
  return ModeSpectrum(params, std::move(gaps), SpectrumMethod::small_cavity_approx);
}

double cavity_equation_rhs(const DressedAtomParams& params, double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("cavity_equation_rhs needs Omega > 0");
  return cavity_rhs(params, omega);
}

double closed_form_residual(const DressedAtomParams& params, std::size_t r, double gap) {
  const double angle = kPi * gap / params.delta_omega();
  const double omega = static_cast<double>(r) * params.delta_omega() + gap;
  return std::cos(angle) / std::sin(angle) - cavity_rhs(params, omega);
}

double secular_residual(const DressedAtomParams& params, std::size_t r, double gap) {
  const auto s = secular(params, r, gap);
  return std::fabs(s.value) / s.scale;
}

}  // namespace dressed
