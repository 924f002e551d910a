#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dressed {

using Complex = std::complex<double>;

/// Weight xi of |1_A 0_B> and relative phase phi of |0_A 1_B> in the initial
/// superposition sqrt(xi)|1_A 0_B> + sqrt(1 - xi) e^{i phi}|0_A 1_B>.
class SuperpositionSpec {
 public:
  SuperpositionSpec(double xi, double phi = 0.0);

  [[nodiscard]] double xi() const noexcept { return xi_; }
  [[nodiscard]] double phi() const noexcept { return phi_; }

 private:
  double xi_;
  double phi_;
};

/// Reduced two-atom density matrix in the basis
/// {|0_A 0_B>, |0_A 1_B>, |1_A 0_B>, |1_A 1_B>}. Only the listed elements
/// can be nonzero; the |1_A 1_B> population is identically zero.
class ReducedAtomPairMatrix {
 public:
  ReducedAtomPairMatrix(double time, double rho_00_00, double rho_01_01, double rho_10_10,
                        Complex coherence);

  [[nodiscard]] double time() const noexcept { return time_; }
  [[nodiscard]] double rho_00_00() const noexcept { return rho_00_00_; }
  [[nodiscard]] double rho_01_01() const noexcept { return rho_01_01_; }
  [[nodiscard]] double rho_10_10() const noexcept { return rho_10_10_; }
  [[nodiscard]] double rho_11_11() const noexcept { return 0.0; }
  /// rho^{1_A 0_B}_{0_A 1_B}
  [[nodiscard]] Complex coherence_10_01() const noexcept { return coherence_; }
  /// rho^{0_A 1_B}_{1_A 0_B}, the conjugate of coherence_10_01
  [[nodiscard]] Complex coherence_01_10() const noexcept { return std::conj(coherence_); }

  [[nodiscard]] double trace() const noexcept { return rho_00_00_ + rho_01_01_ + rho_10_10_ + rho_11_11(); }
  [[nodiscard]] Eigen::Matrix4cd dense() const;
  /// Tr rho^2 from the dense matrix.
  [[nodiscard]] double purity() const;
  /// Ascending eigenvalues of the dense matrix.
  [[nodiscard]] std::array<double, 4> eigenvalues() const;

 private:
  double time_;
  double rho_00_00_;
  double rho_01_01_;
  double rho_10_10_;
  Complex coherence_;
};

/// Elements after tracing out both dressing fields, given f_AA(t) and f_BB(t).
/// Throws DomainError if the ground population comes out negative.
ReducedAtomPairMatrix reduced_pair_matrix(Complex f_aa, Complex f_bb, const SuperpositionSpec& spec,
                                          double t);

/// Degree of impurity D = 1 - Tr rho^2. Evaluated from the dense matrix and
/// from 2u - 2u^2 with u = xi|f_AA|^2 + (1-xi)|f_BB|^2; throws
/// InvariantViolation if the two disagree by more than 1e-9.
double impurity(const ReducedAtomPairMatrix& m);

/// Identical atoms: D = 2|f00|^2 (1 - |f00|^2), whatever xi and phi.
double impurity_identical(Complex f00, const SuperpositionSpec& spec);

/// Reduced state of atom A after tracing out atom B:
///   (1 - xi)|ground><ground| + xi sum_{mu,nu} f_{A mu} f*_{A nu} |mu><nu|.
class SingleAtomReducedMatrix {
 public:
  SingleAtomReducedMatrix(double time, double xi, std::vector<Complex> row);

  [[nodiscard]] double time() const noexcept { return time_; }
  [[nodiscard]] double xi() const noexcept { return xi_; }
  [[nodiscard]] const std::vector<Complex>& row() const noexcept { return row_; }

  /// sum_nu |f_{A nu}|^2
  [[nodiscard]] double row_norm_sq() const;
  /// The two nonzero eigenvalues, from the 2x2 Gram matrix of the rank-2 factor.
  [[nodiscard]] std::array<double, 2> nonzero_eigenvalues() const;
  /// Full (N+2)x(N+2) Hermitian matrix; index 0 is the ground state.
  [[nodiscard]] Eigen::MatrixXcd dense() const;

 private:
  double time_;
  double xi_;
  std::vector<Complex> row_;
};

/// Requires sum_nu |f_{A nu}|^2 = 1 within 1e-6 (InvariantViolation otherwise).
SingleAtomReducedMatrix single_atom_reduced(std::vector<Complex> row, const SuperpositionSpec& spec,
                                            double t);

/// -sum alpha ln alpha over eigenvalues above `cutoff` (nats).
double entropy_from_eigenvalues(std::span<const double> eigenvalues, double cutoff = 1e-12);

/// von Neumann entropy of the single-atom reduced state.
double von_neumann_entropy(const SingleAtomReducedMatrix& m);

/// -[(1 - xi) ln(1 - xi) + xi ln xi]
double entropy_closed_form(double xi);

}  // namespace dressed
