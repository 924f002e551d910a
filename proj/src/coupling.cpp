#include "dressed/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dressed/errors.hpp"

namespace dressed {

double atom_element(double omega_r, const DressedAtomParams& params) {
  if (!(omega_r > 0.0)) throw DomainError("atom_element needs a positive normal frequency");
  const double wb_sq = params.omega_bar() * params.omega_bar();
  const double w_sq = omega_r * omega_r;
  const double g = params.g();
  const double radicand = (w_sq - wb_sq) * (w_sq - wb_sq) +
                          0.5 * params.eta_sq() * (3.0 * w_sq - wb_sq) + 4.0 * g * g * w_sq;
  if (!(radicand > 0.0)) {
    throw DomainError("non-positive radicand in atom_element at Omega = " + std::to_string(omega_r));
  }
  return params.eta() * omega_r / std::sqrt(radicand);
}

double field_element(double omega_k, double omega_r, double t_atom_r, const DressedAtomParams& params) {
  const double denom = (omega_k - omega_r) * (omega_k + omega_r);
  if (std::fabs(denom) < 1e-12 * omega_k * omega_k) {
    throw DivisionHazard("normal frequency " + std::to_string(omega_r) +
                         " collides with field frequency " + std::to_string(omega_k));
  }
  return params.eta() * omega_k / denom * t_atom_r;
}

TransformMatrix::TransformMatrix(ModeSpectrum spectrum, Eigen::MatrixXd t)
    : spectrum_(std::move(spectrum)), t_(std::move(t)) {
  const auto n = static_cast<Eigen::Index>(spectrum_.size());
  if (t_.rows() != n || t_.cols() != n) throw InvalidArgument("transform matrix must be (N+1)x(N+1)");
  tail_deficit_.resize(spectrum_.size());
  for (Eigen::Index mu = 0; mu < n; ++mu) tail_deficit_[mu] = 1.0 - t_.row(mu).squaredNorm();
}

double TransformMatrix::column_norm_error() const {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < t_.cols(); ++r) worst = std::max(worst, std::fabs(t_.col(r).squaredNorm() - 1.0));
  return worst;
}

double TransformMatrix::orthogonality_residual() const {
  const Eigen::MatrixXd gram = t_ * t_.transpose();
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

TransformMatrix build_matrix(const ModeSpectrum& spectrum) {
  if (spectrum.method() != SpectrumMethod::exact_roots && spectrum.method() != SpectrumMethod::oracle) {
    throw InvalidArgument("build_matrix needs an N-mode spectrum (exact-roots or oracle), got " +
                          std::string(to_string(spectrum.method())));
  }
  const auto& p = spectrum.params();
  const std::size_t n = spectrum.size();
  const auto& bigomegas = spectrum.bigomegas();
  Eigen::MatrixXd t(n, n);

  std::vector<double> ratio(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double omega_r = bigomegas[r];
    // ratio[k] = t_k^r / t_atom^r
    double norm_sq = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
      const double omega_k = p.field_frequency(k);
      const double denom = spectrum.detuning(k, r) * (omega_k + omega_r);
      if (std::fabs(denom) < 1e-12 * omega_k * omega_k) {
        throw DivisionHazard("normal mode " + std::to_string(r) + " collides with field mode " +
                             std::to_string(k));
      }
      ratio[k] = p.eta() * omega_k / denom;
      norm_sq += ratio[k] * ratio[k];
    }
    const double t_atom = 1.0 / std::sqrt(norm_sq);
    t(0, static_cast<Eigen::Index>(r)) = t_atom;
    for (std::size_t k = 1; k < n; ++k) t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = ratio[k] * t_atom;
  }

  TransformMatrix out(spectrum, std::move(t));
  if (out.column_norm_error() > 1e-6) {
    throw NormalizationFailure("column norm off by " + std::to_string(out.column_norm_error()));
  }
  return out;
}

AtomRow continuum_atom_row(const ModeSpectrum& spectrum) {
  AtomRow row{spectrum.bigomegas(), {}, 1.0};
  row.weights.reserve(spectrum.size());
  for (double omega : row.bigomegas) {
    const double t = atom_element(omega, spectrum.params());
    row.weights.push_back(t * t);
    row.tail_deficit -= t * t;
  }
  return row;
}

SmallCavityElements approx_small_cavity_elements(const DressedAtomParams& params, std::size_t k_max,
                                                 double delta_threshold) {
  const double delta = params.delta();
  if (!(delta < delta_threshold)) {
    throw RegimeViolation("small-cavity formulas need delta < " + std::to_string(delta_threshold) +
                          ", got " + std::to_string(delta));
  }
  SmallCavityElements out;
  out.atom_sq = 1.0 / (1.0 + 2.0 * std::numbers::pi * delta / 3.0);
  out.field_sq.resize(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    out.field_sq[k - 1] = 4.0 / (kk * kk) * (delta / std::numbers::pi) * out.atom_sq;
  }
  return out;
}

}  // namespace dressed
