#pragma once

#include <cstddef>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dressed/cli/config.hpp"

namespace dressed::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kNumericalFailure = 2, kInvariantViolation = 3 };

/// Maps a library exception onto the CLI exit code.
int exit_code_for(const std::exception& error) noexcept;

struct CommandResult {
  int exit_code = kSuccess;
  std::vector<std::filesystem::path> files;
};

/// Cotangent curve, right-hand-side line and intersections of the cavity
/// equation (spectrum_curve.csv, spectrum_roots.csv, optional spectrum.svg).
CommandResult run_spectrum(const RunConfig& config, std::ostream& log);

/// f_{mu nu}(t) for the configured regime (amplitude.csv: t, re_f, im_f, abs2_f, method).
CommandResult run_amplitude(const RunConfig& config, std::ostream& log);

/// D(t) for the small-cavity series, the N-mode system and free space on
/// one grid (impurity.csv, optional impurity.svg).
CommandResult run_impurity(const RunConfig& config, std::ostream& log);

/// Reduced pair matrix, D and E(t) from the N-mode system (bipartite.csv).
/// Exit code 3 if E drifts from E(0) or from the closed form by more than 1e-8.
CommandResult run_entropy(const RunConfig& config, std::ostream& log);

/// Transformation matrix of the N-mode system (matrix.csv).
CommandResult run_matrix_dump(const RunConfig& config, std::ostream& log);

struct OracleCheck {
  std::string name;
  std::size_t n_modes;
  double value;
  double tolerance;
  [[nodiscard]] bool pass() const noexcept { return value <= tolerance; }
};

/// Analytic pipeline against the dense diagonalization for each N in `sizes`.
std::vector<OracleCheck> oracle_checks(const RunConfig& config, const std::vector<std::size_t>& sizes);

/// Runs oracle_checks for N in {10, 50, 200}; prints a table and writes
/// oracle_check.csv. Exit code 3 on any failure.
CommandResult run_oracle_check(const RunConfig& config, std::ostream& log);

/// Convergence indicator of an N-mode run: the part of the infinite-cavity
/// atom weight carried by normal modes beyond r = N.
double atom_tail_estimate(const RunConfig& config);

}  // namespace dressed::cli
