#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "dressed/coupling.hpp"
#include "dressed/errors.hpp"
#include "dressed/spectrum.hpp"

namespace dressed {
namespace {

DressedAtomParams figure_params(std::size_t n) { return DressedAtomParams::from_delta(1.0, 0.5, 0.1, n); }

TEST(Coupling, SingleModeMatchesTwoByTwoEigenvectors) {
  const auto p = figure_params(1);
  const double w1 = p.field_frequency(1);
  const double a = 1.0 + p.eta_sq();
  const double b = -p.eta() * w1;
  const double d = w1 * w1;
  const double tr = a + d;
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
  const auto tm = build_matrix(solve_eigenfrequencies(p));
  for (int r = 0; r < 2; ++r) {
    const double lambda = 0.5 * (tr + (r == 0 ? -disc : disc));
    // (a - lambda) x + b y = 0 with x > 0
    Eigen::Vector2d v(-b, a - lambda);
    v.normalize();
    if (v(0) < 0) v = -v;
    EXPECT_NEAR(tm.element(Oscillator::atom(), r), v(0), 1e-12);
    EXPECT_NEAR(tm.element(Oscillator::field(1), r), v(1), 1e-12);
  }
}

TEST(Coupling, MatrixIsOrthogonal) {
  for (double delta : {0.05, 0.1, 1.0, 10.0}) {
    const auto tm = build_matrix(solve_eigenfrequencies(DressedAtomParams::from_delta(1.0, 0.5, delta, 200)));
    EXPECT_LT(tm.orthogonality_residual(), 1e-10) << "delta=" << delta;
    EXPECT_LT(tm.column_norm_error(), 1e-12);
    for (double deficit : tm.tail_deficit()) EXPECT_LT(std::abs(deficit), 1e-10);
    const Eigen::MatrixXd gram = tm.matrix().transpose() * tm.matrix();
    EXPECT_LT((gram - Eigen::MatrixXd::Identity(201, 201)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Coupling, AtomComponentPositive) {
  const auto tm = build_matrix(solve_eigenfrequencies(figure_params(50)));
  for (std::size_t r = 0; r < tm.size(); ++r) EXPECT_GT(tm.element(Oscillator::atom(), r), 0.0);
}

TEST(Coupling, FieldElementFormula) {
  const auto p = figure_params(3);
  EXPECT_NEAR(field_element(5.0, 1.0, 0.5, p), p.eta() * 5.0 / 24.0 * 0.5, 1e-15);
  EXPECT_THROW(field_element(5.0, 5.0, 0.5, p), DivisionHazard);
}

TEST(Coupling, AtomElementInfiniteCavity) {
  const auto p = figure_params(5);
  const auto s = solve_closed_form_eigenfrequencies(p);
  const double t00 = atom_element(s.bigomegas()[0], p);
  EXPECT_NEAR(t00 * t00, 0.82037, 5e-5);
  EXPECT_THROW(atom_element(0.0, p), DomainError);
  EXPECT_THROW(atom_element(-1.0, p), DomainError);
}

TEST(Coupling, FiniteAtomRowConvergesToInfiniteCavity) {
  const auto p = figure_params(2000);
  const auto tm = build_matrix(solve_eigenfrequencies(p));
  const auto closed = solve_closed_form_eigenfrequencies(figure_params(3));
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_NEAR(tm.element(Oscillator::atom(), r), atom_element(closed.bigomegas()[r], p), 1e-4) << "r=" << r;
  }
}

TEST(Coupling, ContinuumAtomRowSumsToOne) {
  const auto p = DressedAtomParams::from_delta(1.0, 0.5, 0.1, 20000);
  const auto row = continuum_atom_row(solve_closed_form_eigenfrequencies(p));
  ASSERT_EQ(row.weights.size(), 20001u);
  // (t_atom^r)^2 ~ eta^2 / Omega_r^2, so the weight beyond r = N is about 4 g / (pi delta_omega N)
  const double expected = 4.0 * p.g() / (std::numbers::pi * p.delta_omega() * 20000.0);
  EXPECT_NEAR(row.tail_deficit / expected, 1.0, 0.01);
}

TEST(Coupling, BuildMatrixRejectsClosedFormSpectrum) {
  EXPECT_THROW(build_matrix(solve_closed_form_eigenfrequencies(figure_params(4))), InvalidArgument);
  EXPECT_THROW(build_matrix(approx_small_cavity_spectrum(figure_params(4))), InvalidArgument);
}

TEST(Coupling, SmallCavityElements) {
  const auto e = approx_small_cavity_elements(figure_params(5), 100);
  EXPECT_NEAR(e.atom_sq, 0.826829280451, 1e-11);
  ASSERT_EQ(e.field_sq.size(), 100u);
  EXPECT_NEAR(e.field_sq[1], 0.0263187934154, 1e-12);
  EXPECT_NEAR(e.field_sq[0], 4.0 * e.field_sq[1], 1e-15);
  EXPECT_THROW(approx_small_cavity_elements(figure_params(5).with_modes(1), 10, 0.05), RegimeViolation);
}

TEST(Coupling, SmallCavityElementsMatchExactMatrix) {
  const auto tm = build_matrix(solve_eigenfrequencies(figure_params(2000)));
  const auto e = approx_small_cavity_elements(figure_params(5), 5);
  const double t00 = tm.element(Oscillator::atom(), 0);
  EXPECT_NEAR(t00 * t00, e.atom_sq, 0.01);
  const double omega0 = tm.spectrum().bigomegas()[0];
  for (std::size_t k = 1; k <= 3; ++k) {
    const double tk0 = tm.element(Oscillator::field(k), 0);
    // next order is (Omega_0 / omega_k)^2 = (Omega_0 delta / (g k))^2
    const double x = omega0 / tm.spectrum().params().field_frequency(k);
    EXPECT_NEAR(tk0 * tk0 / e.field_sq[k - 1], 1.0, 0.01 + 2.5 * x * x) << "k=" << k;
  }
}

}  // namespace
}  // namespace dressed
