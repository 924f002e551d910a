// Command-line front end: spectra, amplitudes, impurity and entropy traces
// of dressed atoms in a spherical cavity.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dressed/cli/commands.hpp"
#include "dressed/cli/config.hpp"

namespace {

using dressed::cli::CommandResult;
using dressed::cli::RunConfig;

struct Overrides {
  std::optional<std::string> config_file;
  std::map<std::string, std::string> values;
  bool svg = false;
};

// Flags shared by every subcommand; each maps onto a config key.
void add_common_options(CLI::App& sub, Overrides& o) {
  static const std::pair<const char*, const char*> kFlags[] = {
      {"--delta", "delta"},         {"--radius", "radius"},       {"--g", "g"},
      {"--omega-bar", "omega_bar"}, {"--g-b", "g_b"},             {"--omega-bar-b", "omega_bar_b"},
      {"--xi", "xi"},               {"--phi", "phi"},             {"--regime", "regime"},
      {"--t-max", "t_max"},         {"--steps", "steps"},         {"--n-modes", "n_modes"},
      {"--k-max", "k_max"},         {"--mu", "mu"},               {"--nu", "nu"},
      {"--plot-intervals", "plot_intervals"}, {"--out", "out"},
  };
  sub.add_option("--config", o.config_file, "key=value configuration file");
  for (const auto& [flag, key] : kFlags) {
    sub.add_option_function<std::string>(flag, [&o, key = std::string(key)](const std::string& v) { o.values[key] = v; },
                                         std::string("override '") + key + "'");
  }
  sub.add_flag("--svg", o.svg, "also write an SVG plot");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dressed atoms in a reflecting spherical cavity"};
  app.require_subcommand(1);
  Overrides overrides;

  using Runner = std::function<CommandResult(const RunConfig&, std::ostream&)>;
  const std::pair<const char*, std::pair<const char*, Runner>> commands[] = {
      {"spectrum", {"normal frequencies and the cavity-equation curves", dressed::cli::run_spectrum}},
      {"amplitude", {"probability amplitude f_mu,nu(t)", dressed::cli::run_amplitude}},
      {"impurity", {"degree of impurity D(t), small cavity vs free space", dressed::cli::run_impurity}},
      {"entropy", {"reduced density matrix and von Neumann entropy E(t)", dressed::cli::run_entropy}},
      {"matrix-dump", {"transformation matrix t_mu^r", dressed::cli::run_matrix_dump}},
      {"oracle-check", {"compare against dense diagonalization", dressed::cli::run_oracle_check}},
  };
  std::map<CLI::App*, Runner> runners;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    add_common_options(*sub, overrides);
    runners[sub] = entry.second;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dressed::cli::kUsage;
  }

  try {
    RunConfig config;
    if (overrides.config_file) dressed::cli::apply_config_file(config, *overrides.config_file);
    for (const auto& [key, value] : overrides.values) dressed::cli::apply_setting(config, key, value);
    if (overrides.svg) config.svg = true;
    dressed::cli::resolve_warnings(config);

    for (const auto& [sub, run] : runners) {
      if (!sub->parsed()) continue;
      const auto result = run(config, std::cerr);
      for (const auto& file : result.files) std::cout << file.string() << '\n';
      return result.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dressed::cli::exit_code_for(e);
  }
  return dressed::cli::kUsage;
}
