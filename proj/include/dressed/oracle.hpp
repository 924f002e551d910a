#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dressed/params.hpp"
#include "dressed/spectrum.hpp"

namespace dressed {

/// Symmetric matrix B of the coupled quadratic Hamiltonian, rows and columns
/// ordered (atom, field 1..N):
///   B[atom][atom] = wb^2 + N eta^2,  B[k][k] = omega_k^2,  B[atom][k] = -eta omega_k.
/// The atom diagonal carries the bare frequency, so that subtracting the
/// counterterm N eta^2 leaves the renormalized wb.
struct QuadraticForm {
  DressedAtomParams params;
  Eigen::MatrixXd matrix;
};

QuadraticForm build_form(const DressedAtomParams& params);

struct JacobiConfig {
  int max_sweeps = 100;
};

struct SymmetricEigen {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< column i belongs to values(i)
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolve of a real symmetric matrix. A rotation is skipped
/// when the off-diagonal entry is negligible relative to its two diagonal
/// entries, which preserves small eigenvalues of graded matrices to high
/// relative accuracy. Throws ConvergenceFailure after max_sweeps.
SymmetricEigen jacobi_eigensolve(Eigen::MatrixXd a, const JacobiConfig& config = {});

/// Eigen-decomposition of a quadratic form: eigenvalues Omega_r^2 ascending,
/// eigenvectors with positive atom component.
class Decomposition {
 public:
  Decomposition(DressedAtomParams params, Eigen::VectorXd eigenvalues, Eigen::MatrixXd vectors);

  [[nodiscard]] const DressedAtomParams& params() const noexcept { return params_; }
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  [[nodiscard]] const Eigen::MatrixXd& vectors() const noexcept { return vectors_; }
  [[nodiscard]] Eigen::VectorXd frequencies() const { return eigenvalues_.cwiseSqrt(); }

  /// The frequencies as a ModeSpectrum tagged `oracle`.
  [[nodiscard]] ModeSpectrum spectrum() const;

 private:
  DressedAtomParams params_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd vectors_;
};

/// Throws ConvergenceFailure if the Jacobi sweep cap is hit or an eigenpair
/// residual exceeds 1e-10 ||B||, DomainError if an eigenvalue is not positive.
Decomposition diagonalize(const QuadraticForm& form, const JacobiConfig& config = {});

/// sum_s v_mu^s v_nu^s exp(-i Omega_s t)
std::complex<double> oracle_amplitude(const Decomposition& decomp, Oscillator mu, Oscillator nu, double t);

}  // namespace dressed
