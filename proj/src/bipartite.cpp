#include "dressed/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dressed/errors.hpp"

namespace dressed {

SuperpositionSpec::SuperpositionSpec(double xi, double phi) : xi_(xi), phi_(phi) {
  if (!(xi > 0.0 && xi < 1.0)) throw InvalidArgument("xi must lie in (0, 1), got " + std::to_string(xi));
  if (!std::isfinite(phi)) throw InvalidArgument("phi must be finite");
}

ReducedAtomPairMatrix::ReducedAtomPairMatrix(double time, double rho_00_00, double rho_01_01,
                                             double rho_10_10, Complex coherence)
    : time_(time), rho_00_00_(rho_00_00), rho_01_01_(rho_01_01), rho_10_10_(rho_10_10), coherence_(coherence) {}

Eigen::Matrix4cd ReducedAtomPairMatrix::dense() const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = rho_00_00_;
  rho(1, 1) = rho_01_01_;
  rho(2, 2) = rho_10_10_;
  rho(3, 3) = rho_11_11();
  // <0_A 1_B| rho |1_A 0_B>
  rho(1, 2) = coherence_10_01();
  rho(2, 1) = coherence_01_10();
  return rho;
}

double ReducedAtomPairMatrix::purity() const { return dense().cwiseAbs2().sum(); }

std::array<double, 4> ReducedAtomPairMatrix::eigenvalues() const {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(dense(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

ReducedAtomPairMatrix reduced_pair_matrix(Complex f_aa, Complex f_bb, const SuperpositionSpec& spec,
                                          double t) {
  const double xi = spec.xi();
  const double a = xi * std::norm(f_aa);
  const double b = (1.0 - xi) * std::norm(f_bb);
  const double ground = 1.0 - a - b;
  if (ground < -1e-9) {
    throw DomainError("ground population " + std::to_string(ground) + " is negative at t = " +
                      std::to_string(t));
  }
  const Complex coherence = std::sqrt(xi * (1.0 - xi)) * std::polar(1.0, spec.phi()) * std::conj(f_aa) * f_bb;
  return {t, ground, b, a, coherence};
}

double impurity(const ReducedAtomPairMatrix& m) {
  const double from_matrix = 1.0 - m.purity();
  const double u = m.rho_10_10() + m.rho_01_01();
  const double closed = 2.0 * u - 2.0 * u * u;
  if (std::fabs(from_matrix - closed) > 1e-9) {
    throw InvariantViolation("impurity routes disagree: " + std::to_string(from_matrix) + " vs " +
                             std::to_string(closed));
  }
  return closed;
}

double impurity_identical(Complex f00, const SuperpositionSpec& /*spec*/) {
  const double p = std::norm(f00);
  return 2.0 * p * (1.0 - p);
}

SingleAtomReducedMatrix::SingleAtomReducedMatrix(double time, double xi, std::vector<Complex> row)
    : time_(time), xi_(xi), row_(std::move(row)) {}

double SingleAtomReducedMatrix::row_norm_sq() const {
  double sum = 0.0;
  for (const auto& f : row_) sum += std::norm(f);
  return sum;
}

std::array<double, 2> SingleAtomReducedMatrix::nonzero_eigenvalues() const {
  // rho_A = X X^dagger with X = [sqrt(1-xi) e_ground, sqrt(xi) (0, f)]; the
  // nonzero spectrum is that of the 2x2 Gram matrix X^dagger X.
  const double g11 = 1.0 - xi_;
  const double g22 = xi_ * row_norm_sq();
  const Complex g12 = 0.0;  // the ground state is orthogonal to every one-quantum state
  const double mean = 0.5 * (g11 + g22);
  const double half_gap = std::sqrt(0.25 * (g11 - g22) * (g11 - g22) + std::norm(g12));
  return {mean - half_gap, mean + half_gap};
}

Eigen::MatrixXcd SingleAtomReducedMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(row_.size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  rho(0, 0) = 1.0 - xi_;
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      rho(mu + 1, nu + 1) = xi_ * row_[static_cast<std::size_t>(mu)] * std::conj(row_[static_cast<std::size_t>(nu)]);
    }
  }
  return rho;
}

SingleAtomReducedMatrix single_atom_reduced(std::vector<Complex> row, const SuperpositionSpec& spec,
                                            double t) {
  SingleAtomReducedMatrix m(t, spec.xi(), std::move(row));
  const double norm = m.row_norm_sq();
  if (std::fabs(norm - 1.0) > 1e-6) {
    throw InvariantViolation("amplitude row not normalized: sum |f|^2 = " + std::to_string(norm));
  }
  return m;
}

double entropy_from_eigenvalues(std::span<const double> eigenvalues, double cutoff) {
  double e = 0.0;
  for (double alpha : eigenvalues) {
    if (alpha > cutoff) e -= alpha * std::log(alpha);
  }
  return e;
}

double von_neumann_entropy(const SingleAtomReducedMatrix& m) {
  const auto alphas = m.nonzero_eigenvalues();
  return entropy_from_eigenvalues(alphas);
}

double entropy_closed_form(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw InvalidArgument("xi must lie in [0, 1]");
  auto term = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
  return -(term(1.0 - xi) + term(xi));
}

}  // namespace dressed
