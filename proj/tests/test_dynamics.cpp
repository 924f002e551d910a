#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "dressed/coupling.hpp"
#include "dressed/dynamics.hpp"
#include "dressed/errors.hpp"
#include "dressed/spectrum.hpp"

namespace dressed {
namespace {

constexpr double kPi = std::numbers::pi;

DressedAtomParams figure_params(std::size_t n) { return DressedAtomParams::from_delta(1.0, 0.5, 0.1, n); }

class DiscreteAmplitude : public ::testing::Test {
 protected:
  TransformMatrix tm = build_matrix(solve_eigenfrequencies(figure_params(60)));
};

TEST_F(DiscreteAmplitude, IdentityAtTimeZero) {
  for (std::size_t mu = 0; mu <= 60; mu += 7) {
    for (std::size_t nu = 0; nu <= 60; nu += 5) {
      const auto f = amplitude_discrete(tm, Oscillator::from_index(mu), Oscillator::from_index(nu), 0.0);
      EXPECT_NEAR(f.real(), mu == nu ? 1.0 : 0.0, 1e-12);
      EXPECT_EQ(f.imag(), 0.0);
    }
  }
}

TEST_F(DiscreteAmplitude, Symmetric) {
  for (double t : {0.3, 4.0, 31.0}) {
    const auto a = amplitude_discrete(tm, Oscillator::atom(), Oscillator::field(3), t);
    const auto b = amplitude_discrete(tm, Oscillator::field(3), Oscillator::atom(), t);
    EXPECT_EQ(a, b);
  }
}

TEST_F(DiscreteAmplitude, RowMatchesElementwise) {
  const double t = 2.7;
  const auto row = amplitude_row(tm, Oscillator::field(2), t);
  ASSERT_EQ(row.size(), 61u);
  for (std::size_t nu = 0; nu < row.size(); ++nu) {
    const auto f = amplitude_discrete(tm, Oscillator::field(2), Oscillator::from_index(nu), t);
    EXPECT_LT(std::abs(row[nu] - f), 1e-13);
  }
}

TEST_F(DiscreteAmplitude, RowIsNormalized) {
  for (double t : {0.1, 5.0, 50.0}) {
    for (std::size_t mu : {0u, 1u, 7u}) {
      double norm = 0.0;
      for (const auto& f : amplitude_row(tm, Oscillator::from_index(mu), t)) norm += std::norm(f);
      EXPECT_NEAR(norm, 1.0, 1e-12);
    }
  }
}

TEST_F(DiscreteAmplitude, RejectsOutOfRangeOscillator) {
  EXPECT_THROW(amplitude_discrete(tm, Oscillator::field(61), Oscillator::atom(), 1.0), InvalidArgument);
}

TEST(FreeSpace, ParamsValidation) {
  EXPECT_THROW(FreeSpaceParams(1.0, 1.0), RegimeViolation);
  EXPECT_THROW(FreeSpaceParams(1.0, 2.0), RegimeViolation);
  EXPECT_THROW(FreeSpaceParams(1.0, 0.0), InvalidArgument);
  EXPECT_NEAR(FreeSpaceParams(1.0, 0.5).kappa(), std::sqrt(0.75), 1e-15);
}

TEST(FreeSpace, InitialValueIsOne) {
  const auto f = amplitude_free_space(FreeSpaceParams(1.0, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(f.real(), 1.0);
  EXPECT_EQ(f.imag(), 0.0);
}

TEST(FreeSpace, RealPartAtHalfPeriod) {
  const FreeSpaceParams p(1.0, 0.5);
  const auto f = amplitude_free_space(p, kPi / p.kappa());
  EXPECT_NEAR(f.real(), -0.163033534822, 1e-12);
}

TEST(FreeSpace, ModulusReferenceValues) {
  const FreeSpaceParams p(1.0, 0.5);
  EXPECT_NEAR(std::norm(amplitude_free_space(p, 8.0)), 3.7061e-4, 1e-8);
  EXPECT_NEAR(std::norm(amplitude_free_space(p, 20.0)), 4.0265e-8, 1e-12);
  EXPECT_NEAR(std::norm(amplitude_free_space(p, 50.0)), 1.0275956e-10, 1e-15);
}

TEST(FreeSpace, FloorApproachesPiSquaredTimesTrueAsymptote) {
  // the quoted 64 g^2 / (wb^8 t^6) floor overshoots the exact tail by pi^2
  const FreeSpaceParams p(1.0, 0.5);
  const double t = 200.0;
  const double exact = std::norm(amplitude_free_space(p, t));
  const double quoted = f00_sq_large_time(t, 1.0, 0.5);
  EXPECT_NEAR(quoted / exact, kPi * kPi, 0.05 * kPi * kPi);
}

TEST(FreeSpace, LargeTimeFormula) {
  const double t = 3.0;
  const double osc = std::cos(t) - 0.5 * std::sin(t);
  EXPECT_NEAR(f00_sq_large_time(t, 1.0, 0.5), std::exp(-t) * osc * osc + 16.0 / std::pow(t, 6), 1e-15);
  EXPECT_THROW(f00_sq_large_time(0.0, 1.0, 0.5), InvalidArgument);
}

TEST(FreeSpace, ContinuumCavityApproachesClosedForm) {
  // before the echo at t = 2R/c a large cavity differs from free space by O(1/delta)
  const FreeSpaceParams fs(1.0, 0.5);
  std::vector<double> worst;
  for (double delta : {50.0, 500.0}) {
    const auto p = DressedAtomParams::from_delta(1.0, 0.5, delta, 1000000);
    const auto row = continuum_atom_row(solve_closed_form_eigenfrequencies(p));
    double w = 0.0;
    for (double t : {0.5, 2.0, 5.0, 10.0}) w = std::max(w, std::abs(survival_amplitude(row, t) - amplitude_free_space(fs, t)));
    EXPECT_LT(w, 0.1 / delta) << "delta=" << delta;
    worst.push_back(w);
  }
  EXPECT_NEAR(worst[0] / worst[1], 10.0, 1.0);
}

TEST(SmallCavity, SeriesStartsAtOne) {
  const auto v = f00_sq_small_cavity(0.0, figure_params(1));
  EXPECT_NEAR(v.value, 1.0, v.tail_bound + 1e-12);
  EXPECT_LT(v.tail_bound, 1e-3);
}

TEST(SmallCavity, SeriesMatchesAmplitudeModulus) {
  const auto p = figure_params(1);
  for (double t : {0.0, 0.7, 3.0, 12.5}) {
    const auto v = f00_sq_small_cavity(t, p, 5000);
    EXPECT_NEAR(v.value, std::norm(amplitude_small_cavity(t, p, 5000)), 1e-12);
  }
}

TEST(SmallCavity, LowerBoundValues) {
  EXPECT_NEAR(f00_sq_lower_bound(0.1), 0.367293318022, 1e-11);
  EXPECT_NEAR(f00_sq_lower_bound(0.05), 0.638799244209, 1e-11);
  EXPECT_THROW(f00_sq_lower_bound(0.3), RegimeViolation);
}

TEST(SmallCavity, SeriesRespectsLowerBound) {
  const auto p = figure_params(1);
  const double bound = f00_sq_lower_bound(0.1);
  for (double t : time_grid(100.0, 2001)) {
    const auto v = f00_sq_small_cavity(t, p, 2000);
    EXPECT_GE(v.value + v.tail_bound, bound) << "t=" << t;
  }
}

TEST(SmallCavity, AgreesWithDiscreteSumAtShortTimes) {
  const auto p = figure_params(2000);
  const auto tm = build_matrix(solve_eigenfrequencies(p));
  for (double t : time_grid(2.0, 41)) {
    const double exact = std::norm(amplitude_discrete(tm, Oscillator::atom(), Oscillator::atom(), t));
    EXPECT_NEAR(f00_sq_small_cavity(t, p, 2000).value, exact, 0.03) << "t=" << t;
  }
}

TEST(SmallCavity, TimeAverageAgreesWithDiscreteSum) {
  const auto p = figure_params(2000);
  const auto tm = build_matrix(solve_eigenfrequencies(p));
  const auto grid = time_grid(100.0, 4001);
  double series = 0.0;
  double exact = 0.0;
  for (double t : grid) {
    series += f00_sq_small_cavity(t, p, 2000).value;
    exact += std::norm(amplitude_discrete(tm, Oscillator::atom(), Oscillator::atom(), t));
  }
  EXPECT_NEAR(series / grid.size(), exact / grid.size(), 0.02);
}

TEST(SmallCavity, RejectsLargeDelta) {
  EXPECT_THROW(f00_sq_small_cavity(1.0, DressedAtomParams::from_delta(1.0, 0.5, 1.0, 1)), RegimeViolation);
  EXPECT_THROW(amplitude_small_cavity(1.0, figure_params(1), 0), InvalidArgument);
}

TEST(Traces, GridAndMethods) {
  const auto grid = time_grid(10.0, 11);
  ASSERT_EQ(grid.size(), 11u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid.back(), 10.0);
  EXPECT_DOUBLE_EQ(grid[3], 3.0);
  EXPECT_EQ(time_grid(5.0, 1), std::vector<double>{0.0});
  EXPECT_THROW(time_grid(0.0, 5), InvalidArgument);

  const auto tm = build_matrix(solve_eigenfrequencies(figure_params(10)));
  const auto d = trace_discrete(tm, Oscillator::atom(), Oscillator::field(2), grid);
  EXPECT_EQ(d.method, AmplitudeMethod::discrete_sum);
  EXPECT_EQ(d.nu, Oscillator::field(2));
  ASSERT_EQ(d.values.size(), grid.size());
  EXPECT_EQ(d.values[4], amplitude_discrete(tm, Oscillator::atom(), Oscillator::field(2), grid[4]));

  EXPECT_EQ(trace_free_space(FreeSpaceParams(1.0, 0.5), grid).method, AmplitudeMethod::free_space_closed_form);
  EXPECT_EQ(trace_small_cavity(figure_params(1), grid).method, AmplitudeMethod::small_cavity_series);
  EXPECT_EQ(to_string(AmplitudeMethod::discrete_sum), "discrete-sum");
}

}  // namespace
}  // namespace dressed
