#pragma once

#include <cstddef>

namespace dressed {

/// Upper bound on delta for the small-cavity (leading order in delta) formulas.
inline constexpr double kSmallCavityThreshold = 0.2;

/// Physical constants of one atom coupled to the N field modes of a
/// reflecting spherical cavity. Immutable; derived quantities are fixed on
/// construction.
///
/// Units are arbitrary but consistent: frequencies in 1/time, the radius in
/// length, c in length/time.
class DressedAtomParams {
 public:
  /// Builds the parameter set from the cavity radius.
  static DressedAtomParams from_radius(double omega_bar, double g, double radius,
                                       std::size_t n_modes, double c = 1.0);

  /// Builds the parameter set from delta = g R / (pi c); the radius is derived.
  static DressedAtomParams from_delta(double omega_bar, double g, double delta,
                                      std::size_t n_modes, double c = 1.0);

  [[nodiscard]] double omega_bar() const noexcept { return omega_bar_; }
  [[nodiscard]] double g() const noexcept { return g_; }
  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] std::size_t n_modes() const noexcept { return n_modes_; }

  /// Spacing of neighbouring field frequencies, pi c / R.
  [[nodiscard]] double delta_omega() const noexcept { return delta_omega_; }
  /// Coupling constant eta = sqrt(4 g delta_omega / pi).
  [[nodiscard]] double eta() const noexcept { return eta_; }
  [[nodiscard]] double eta_sq() const noexcept { return eta_sq_; }
  /// g / delta_omega.
  [[nodiscard]] double delta() const noexcept { return delta_; }
  /// omega_bar^2 - g^2; positive in the weak-coupling branch.
  [[nodiscard]] double kappa_sq() const noexcept { return omega_bar_ * omega_bar_ - g_ * g_; }

  /// Bare field frequency omega_k = k pi c / R, k = 1..N (k = 0 gives 0).
  [[nodiscard]] double field_frequency(std::size_t k) const noexcept {
    return static_cast<double>(k) * delta_omega_;
  }

  /// Same physics with a different number of retained field modes.
  [[nodiscard]] DressedAtomParams with_modes(std::size_t n_modes) const;

 private:
  DressedAtomParams(double omega_bar, double g, double radius, double delta_omega,
                    std::size_t n_modes, double c);

  double omega_bar_;
  double g_;
  double radius_;
  double c_;
  std::size_t n_modes_;
  double delta_omega_;
  double eta_sq_;
  double eta_;
  double delta_;
};

/// Row label of the transformation matrix: the dressed atom or field mode k.
/// Index 0 is the atom, index k >= 1 the k-th field mode.
class Oscillator {
 public:
  static constexpr Oscillator atom() noexcept { return Oscillator{0}; }
  static Oscillator field(std::size_t k);
  static constexpr Oscillator from_index(std::size_t index) noexcept { return Oscillator{index}; }

  [[nodiscard]] constexpr std::size_t index() const noexcept { return index_; }
  [[nodiscard]] constexpr bool is_atom() const noexcept { return index_ == 0; }

  friend constexpr bool operator==(Oscillator, Oscillator) = default;

 private:
  constexpr explicit Oscillator(std::size_t index) noexcept : index_(index) {}
  std::size_t index_;
};

}  // namespace dressed
