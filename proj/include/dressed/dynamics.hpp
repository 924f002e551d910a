#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dressed/coupling.hpp"
#include "dressed/params.hpp"

namespace dressed {

using Complex = std::complex<double>;

enum class AmplitudeMethod { discrete_sum, free_space_closed_form, small_cavity_series };

std::string_view to_string(AmplitudeMethod method);

/// Time series of f_{mu nu}(t).
struct AmplitudeTrace {
  std::vector<double> times;
  std::vector<Complex> values;
  Oscillator mu = Oscillator::atom();
  Oscillator nu = Oscillator::atom();
  AmplitudeMethod method = AmplitudeMethod::discrete_sum;
};

/// omegabar and g of a single atom in free space, with kappa = sqrt(omegabar^2 - g^2).
/// Only the weak-coupling branch kappa^2 > 0 is accepted.
class FreeSpaceParams {
 public:
  FreeSpaceParams(double omega_bar, double g);
  static FreeSpaceParams from(const DressedAtomParams& params) {
    return FreeSpaceParams(params.omega_bar(), params.g());
  }

  [[nodiscard]] double omega_bar() const noexcept { return omega_bar_; }
  [[nodiscard]] double g() const noexcept { return g_; }
  [[nodiscard]] double kappa() const noexcept { return kappa_; }

 private:
  double omega_bar_;
  double g_;
  double kappa_;
};

struct QuadratureConfig {
  double abs_tol = 1e-8;
  std::size_t max_half_periods = 10000;
};

/// f_{mu nu}(t) = sum_s t_mu^s t_nu^s exp(-i Omega_s t).
Complex amplitude_discrete(const TransformMatrix& tm, Oscillator mu, Oscillator nu, double t);

/// f_{mu nu}(t) for every nu, in row order (atom, field 1..N).
std::vector<Complex> amplitude_row(const TransformMatrix& tm, Oscillator mu, double t);

/// f_atom,atom(t) = sum_r (t_atom^r)^2 exp(-i Omega_r t) from an atom row.
Complex survival_amplitude(const AtomRow& row, double t);

/// G(t) = -(4g/pi) int_0^inf x^2 sin(xt) / ((x^2 - wb^2)^2 + 4 g^2 x^2) dx.
///
/// The integral is split at omegabar and omegabar + 10 g. The head is
/// integrated adaptively in sub-intervals no longer than half a period of
/// sin(xt); the tail half-period by half-period, with the resulting
/// alternating series summed by repeated Euler averaging.
/// Throws QuadratureFailure when the tail does not settle within
/// max_half_periods.
double g_integral(double t, double omega_bar, double g, const QuadratureConfig& quad = {});

/// Free-space survival amplitude
///   exp(-g t)[cos(kappa t) - (g/kappa) sin(kappa t)] + i G(t).
Complex amplitude_free_space(const FreeSpaceParams& p, double t, const QuadratureConfig& quad = {});

/// Large-time form exp(-2gt)[cos(wb t) - (g/wb) sin(wb t)]^2 + 64 g^2 / (wb^8 t^6).
double f00_sq_large_time(double t, double omega_bar, double g);

struct SeriesValue {
  double value;
  double tail_bound;  ///< bound on the contribution of the omitted k > k_max terms
};

/// Small-cavity complex amplitude with the leading-order spectrum and elements:
///   (t_0^0)^2 [exp(-i Omega_0 t) + (4 delta / pi) sum_k exp(-i Omega_k t) / k^2].
Complex amplitude_small_cavity(double t, const DressedAtomParams& params, std::size_t k_max = 10000,
                               double delta_threshold = kSmallCavityThreshold);

/// Small-cavity |f00(t)|^2 as the double cosine series truncated at k_max.
SeriesValue f00_sq_small_cavity(double t, const DressedAtomParams& params, std::size_t k_max = 10000,
                                double delta_threshold = kSmallCavityThreshold);

/// (1 + 2 pi delta / 3)^(-2) (1 - 4 pi delta / 3 - 4 pi^2 delta^2 / 9)
double f00_sq_lower_bound(double delta, double delta_threshold = kSmallCavityThreshold);

/// Traces on a time grid.
AmplitudeTrace trace_discrete(const TransformMatrix& tm, Oscillator mu, Oscillator nu,
                              std::span<const double> times);
AmplitudeTrace trace_free_space(const FreeSpaceParams& p, std::span<const double> times,
                                const QuadratureConfig& quad = {});
AmplitudeTrace trace_small_cavity(const DressedAtomParams& params, std::span<const double> times,
                                  std::size_t k_max = 10000,
                                  double delta_threshold = kSmallCavityThreshold);

/// Evenly spaced grid of `steps` points on [0, t_max].
std::vector<double> time_grid(double t_max, std::size_t steps);

}  // namespace dressed
