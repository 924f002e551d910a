#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "dressed/params.hpp"
#include "dressed/spectrum.hpp"

namespace dressed {

/// Atom component t_atom^r of the normal mode with frequency omega_r for the
/// infinite-mode cavity:
///   eta Omega / sqrt((Omega^2 - wb^2)^2 + (eta^2/2)(3 Omega^2 - wb^2) + 4 g^2 Omega^2).
/// Throws DomainError when the radicand is not positive.
double atom_element(double omega_r, const DressedAtomParams& params);

/// Field component t_k^r = eta omega_k / (omega_k^2 - Omega_r^2) * t_atom^r.
/// Throws DivisionHazard when Omega_r sits on the asymptote omega_k.
double field_element(double omega_k, double omega_r, double t_atom_r, const DressedAtomParams& params);

/// Orthogonal matrix t_mu^r between the bare oscillators (rows: atom, field
/// modes 1..N) and the normal modes (columns r = 0..N) of an N-mode system.
class TransformMatrix {
 public:
  TransformMatrix(ModeSpectrum spectrum, Eigen::MatrixXd t);

  [[nodiscard]] const ModeSpectrum& spectrum() const noexcept { return spectrum_; }
  [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return t_; }
  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(t_.rows()); }

  [[nodiscard]] double element(Oscillator mu, std::size_t r) const {
    return t_(static_cast<Eigen::Index>(mu.index()), static_cast<Eigen::Index>(r));
  }

  /// 1 - sum_r (t_mu^r)^2 for every row mu.
  [[nodiscard]] const std::vector<double>& tail_deficit() const noexcept { return tail_deficit_; }

  /// max_r |sum_mu (t_mu^r)^2 - 1|
  [[nodiscard]] double column_norm_error() const;
  /// max_{mu != nu} |sum_r t_mu^r t_nu^r| together with the diagonal deviation.
  [[nodiscard]] double orthogonality_residual() const;

 private:
  ModeSpectrum spectrum_;
  Eigen::MatrixXd t_;
  std::vector<double> tail_deficit_;
};

/// Assembles t_mu^r for the N-mode system. The atom row uses the
/// normalization over the N retained modes,
///   t_atom^r = [1 + sum_k eta^2 omega_k^2 / (omega_k^2 - Omega_r^2)^2]^(-1/2),
/// which together with field_element makes the truncated matrix orthogonal.
///
/// Accepts exact-roots and oracle spectra only; closed-form spectra describe
/// the infinite-mode cavity and go through continuum_atom_row instead.
/// Throws NormalizationFailure if a column norm is off by more than 1e-6.
TransformMatrix build_matrix(const ModeSpectrum& spectrum);

/// Atom row (t_atom^r)^2 of the infinite-mode cavity, evaluated at each root of
/// a closed-form spectrum with atom_element. This is all f_atom,atom needs,
/// so very large cavities can be handled without a dense matrix.
struct AtomRow {
  std::vector<double> bigomegas;
  std::vector<double> weights;  ///< (t_atom^r)^2
  double tail_deficit;          ///< 1 - sum_r weights
};

AtomRow continuum_atom_row(const ModeSpectrum& spectrum);

/// Leading-order small-cavity elements:
///   (t_0^0)^2 = (1 + 2 pi delta / 3)^(-1),  (t_k^0)^2 = (4 / k^2)(delta / pi)(t_0^0)^2.
struct SmallCavityElements {
  double atom_sq;
  std::vector<double> field_sq;  ///< k = 1..k_max
};

SmallCavityElements approx_small_cavity_elements(const DressedAtomParams& params, std::size_t k_max,
                                                 double delta_threshold = kSmallCavityThreshold);

}  // namespace dressed
