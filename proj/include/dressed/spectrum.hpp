#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dressed/params.hpp"

namespace dressed {

/// Provenance of a set of normal frequencies.
enum class SpectrumMethod {
  exact_roots,          ///< N-mode secular equation, exact for the truncated system
  closed_form_roots,    ///< cotangent equation of the infinite-mode cavity
  small_cavity_approx,  ///< leading order in delta
  oracle,               ///< dense diagonalization of the quadratic form
};

std::string_view to_string(SpectrumMethod method);

struct RootConfig {
  double residual_tol = 1e-10;
  int max_iterations = 200;
  /// First asymptote offset, as a fraction of delta_omega.
  double initial_offset = 1e-9;
};

/// The N+1 normal frequencies of the atom-field system.
///
/// Each root Omega_r is stored together with its offset from the asymptote
/// below it, gap_r = Omega_r - r * delta_omega, which keeps omega_k - Omega_r
/// accurate for roots hugging an asymptote.
class ModeSpectrum {
 public:
  ModeSpectrum(DressedAtomParams params, std::vector<double> gaps, SpectrumMethod method);

  [[nodiscard]] const DressedAtomParams& params() const noexcept { return params_; }
  [[nodiscard]] SpectrumMethod method() const noexcept { return method_; }
  [[nodiscard]] std::size_t size() const noexcept { return bigomegas_.size(); }

  /// Bare field frequencies omega_1..omega_N.
  [[nodiscard]] std::vector<double> omegas() const;
  [[nodiscard]] const std::vector<double>& bigomegas() const noexcept { return bigomegas_; }
  [[nodiscard]] const std::vector<double>& gaps() const noexcept { return gaps_; }

  /// omega_k - Omega_r without cancellation; k = 0 gives -Omega_r.
  [[nodiscard]] double detuning(std::size_t k, std::size_t r) const noexcept {
    return (static_cast<double>(k) - static_cast<double>(r)) * params_.delta_omega() - gaps_[r];
  }

 private:
  DressedAtomParams params_;
  std::vector<double> gaps_;
  std::vector<double> bigomegas_;
  SpectrumMethod method_;
};

/// omega_k = k pi c / R for k = 1..N, ascending.
std::vector<double> field_frequencies(const DressedAtomParams& params);

/// Roots of the N-mode secular equation
///   omegabar^2 - Omega^2 = eta^2 Omega^2 sum_{k=1}^N 1 / (omega_k^2 - Omega^2),
/// i.e. the exact normal frequencies of the system with N retained modes
/// and counterterm N eta^2. One root below omega_1, one in each
/// (omega_k, omega_{k+1}), and one above omega_N.
ModeSpectrum solve_eigenfrequencies(const DressedAtomParams& params, const RootConfig& config = {});

/// Lowest N+1 roots of the infinite-mode cavity equation
///   cot(R Omega / c) = Omega / (2g) + (c / (R Omega)) (1 - R omegabar^2 / (2 g c)).
/// Root r lies in (r pi c / R, (r+1) pi c / R).
ModeSpectrum solve_closed_form_eigenfrequencies(const DressedAtomParams& params,
                                                const RootConfig& config = {});

/// Omega_0 = omegabar (1 - pi delta / 3), Omega_k = (g / delta)(k + 2 delta / (pi k)).
/// Throws RegimeViolation when delta >= delta_threshold.
ModeSpectrum approx_small_cavity_spectrum(const DressedAtomParams& params,
                                          double delta_threshold = kSmallCavityThreshold);

/// Right-hand side of the cavity equation,
///   Omega / (2g) + (c / (R Omega)) (1 - R omegabar^2 / (2 g c)).
double cavity_equation_rhs(const DressedAtomParams& params, double omega);

/// cot(R Omega / c) minus the right-hand side of the cavity equation, with the
/// angle reduced against asymptote r. Zero at closed-form roots.
double closed_form_residual(const DressedAtomParams& params, std::size_t r, double gap);

/// Left minus right side of the N-mode secular equation at Omega = r delta_omega + gap,
/// divided by the sum of magnitudes of its terms.
double secular_residual(const DressedAtomParams& params, std::size_t r, double gap);

}  // namespace dressed
