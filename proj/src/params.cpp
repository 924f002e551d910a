#include "dressed/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dressed/errors.hpp"

namespace dressed {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument(std::string(name) + " must be positive and finite, got " +
                          std::to_string(value));
  }
}

}  // namespace

DressedAtomParams::DressedAtomParams(double omega_bar, double g, double radius,
                                     double delta_omega, std::size_t n_modes, double c)
    : omega_bar_(omega_bar),
      g_(g),
      radius_(radius),
      c_(c),
      n_modes_(n_modes),
      delta_omega_(delta_omega),
      eta_sq_(4.0 * g * delta_omega / std::numbers::pi),
      eta_(std::sqrt(eta_sq_)),
      delta_(g / delta_omega) {
  require_positive(omega_bar_, "omega_bar");
  require_positive(g_, "g");
  require_positive(radius_, "radius");
  require_positive(c_, "c");
  if (n_modes_ < 1) throw InvalidArgument("n_modes must be at least 1");
}

DressedAtomParams DressedAtomParams::from_radius(double omega_bar, double g, double radius,
                                                 std::size_t n_modes, double c) {
  require_positive(radius, "radius");
  require_positive(c, "c");
  return DressedAtomParams(omega_bar, g, radius, std::numbers::pi * c / radius, n_modes, c);
}

DressedAtomParams DressedAtomParams::from_delta(double omega_bar, double g, double delta,
                                                std::size_t n_modes, double c) {
  require_positive(delta, "delta");
  require_positive(g, "g");
  require_positive(c, "c");
  const double delta_omega = g / delta;
  return DressedAtomParams(omega_bar, g, std::numbers::pi * c / delta_omega, delta_omega,
                           n_modes, c);
}

DressedAtomParams DressedAtomParams::with_modes(std::size_t n_modes) const {
  return DressedAtomParams(omega_bar_, g_, radius_, delta_omega_, n_modes, c_);
}

Oscillator Oscillator::field(std::size_t k) {
  if (k == 0) throw InvalidArgument("field modes are numbered from 1");
  return Oscillator{k};
}

}  // namespace dressed
