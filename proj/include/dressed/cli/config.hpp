#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dressed/params.hpp"

namespace dressed::cli {

enum class Regime { small, free_space, exact };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

struct AtomConfig {
  double omega_bar = 1.0;
  double g = 0.5;
};

/// Everything a subcommand needs. Defaults reproduce the impurity figure:
/// g = 0.5, delta = 0.1, omega_bar = 1.
struct RunConfig {
  AtomConfig atom_a;
  std::optional<AtomConfig> atom_b;  ///< unset: identical atoms

  std::optional<double> delta;
  std::optional<double> radius;
  double c = 1.0;

  double xi = 0.5;
  double phi = 0.0;
  Regime regime = Regime::small;

  double t_max = 25.0;
  std::size_t steps = 501;
  std::size_t n_modes = 200;
  std::size_t max_modes = 5000;
  std::size_t k_max = 10000;
  std::size_t plot_intervals = 5;
  std::size_t mu = 0;
  std::size_t nu = 0;

  double delta_threshold = kSmallCavityThreshold;
  double root_tol = 1e-10;
  double quad_tol = 1e-8;

  std::filesystem::path out = "out";
  bool svg = false;

  /// Non-fatal notes collected while resolving the configuration.
  std::vector<std::string> warnings;

  [[nodiscard]] bool identical() const noexcept { return !atom_b.has_value(); }

  /// Parameters of atom A (and B) in the configured cavity. delta wins over
  /// radius when both are given; with neither, delta = 0.1.
  [[nodiscard]] DressedAtomParams params_a() const;
  [[nodiscard]] DressedAtomParams params_b() const;

  /// Throws InvalidArgument on out-of-range values.
  void validate() const;
};

/// Applies one key=value setting. Unknown keys and malformed values throw
/// InvalidArgument.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat key=value text: one setting per line, '#' starts a comment, blank
/// lines ignored.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Records the delta-over-radius warning if both were given.
void resolve_warnings(RunConfig& config);

}  // namespace dressed::cli
