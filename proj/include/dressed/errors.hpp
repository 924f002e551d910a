#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dressed {

/// Base for every failure raised by the library. The CLI maps the
/// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameter (bad range, missing key, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A formula was asked to run outside the regime it was derived for
/// (delta above the small-cavity threshold, kappa^2 <= 0, ...).
class RegimeViolation : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A normal frequency collided with a field-mode asymptote.
class DivisionHazard : public Error {
 public:
  using Error::Error;
};

class NormalizationFailure : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// Root bracketing or iterative eigensolve did not converge.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::size_t index)
      : Error(what + " (interval " + std::to_string(index) + ")"), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A computed object broke one of its physical invariants
/// (trace, unitarity, positivity).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dressed
