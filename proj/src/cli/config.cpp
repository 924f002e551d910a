#include "dressed/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "dressed/errors.hpp"

namespace dressed::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("'" + std::string(key) + "' expects a number, got '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("'" + std::string(key) + "' expects a number, got '" + text + "'");
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw InvalidArgument("'" + std::string(key) + "' expects a non-negative integer, got '" +
                          std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw InvalidArgument("'" + std::string(key) + "' expects true/false, got '" + std::string(value) + "'");
}

AtomConfig& atom_b(RunConfig& config) {
  if (!config.atom_b) config.atom_b = config.atom_a;
  return *config.atom_b;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::small: return "small";
    case Regime::free_space: return "free-space";
    case Regime::exact: return "exact";
  }
  return "unknown";
}

Regime parse_regime(std::string_view text) {
  if (text == "small") return Regime::small;
  if (text == "free-space" || text == "free_space") return Regime::free_space;
  if (text == "exact") return Regime::exact;
  throw InvalidArgument("regime must be one of small, free-space, exact; got '" + std::string(text) + "'");
}

DressedAtomParams RunConfig::params_a() const {
  if (delta) return DressedAtomParams::from_delta(atom_a.omega_bar, atom_a.g, *delta, n_modes, c);
  if (radius) return DressedAtomParams::from_radius(atom_a.omega_bar, atom_a.g, *radius, n_modes, c);
  return DressedAtomParams::from_delta(atom_a.omega_bar, atom_a.g, 0.1, n_modes, c);
}

DressedAtomParams RunConfig::params_b() const {
  if (!atom_b) return params_a();
  // Both atoms share the cavity, so B inherits A's radius.
  return DressedAtomParams::from_radius(atom_b->omega_bar, atom_b->g, params_a().radius(), n_modes, c);
}

void RunConfig::validate() const {
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (steps < 1) throw InvalidArgument("steps must be at least 1");
  if (n_modes < 1) throw InvalidArgument("n_modes must be at least 1 (empty mode range)");
  if (n_modes > max_modes) {
    throw InvalidArgument("n_modes = " + std::to_string(n_modes) + " exceeds the cap max_modes = " +
                          std::to_string(max_modes));
  }
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
  if (!(xi > 0.0 && xi < 1.0)) throw InvalidArgument("xi must lie in (0, 1)");
  if (!(delta_threshold > 0.0)) throw InvalidArgument("delta_threshold must be positive");
  (void)params_a();
  (void)params_b();
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "omega_bar") config.atom_a.omega_bar = parse_double(key, value);
  else if (key == "g") config.atom_a.g = parse_double(key, value);
  else if (key == "omega_bar_b") atom_b(config).omega_bar = parse_double(key, value);
  else if (key == "g_b") atom_b(config).g = parse_double(key, value);
  else if (key == "identical") {
    if (parse_bool(key, value)) config.atom_b.reset();
    else atom_b(config);
  }
  else if (key == "delta") config.delta = parse_double(key, value);
  else if (key == "radius") config.radius = parse_double(key, value);
  else if (key == "c") config.c = parse_double(key, value);
  else if (key == "xi") config.xi = parse_double(key, value);
  else if (key == "phi") config.phi = parse_double(key, value);
  else if (key == "regime") config.regime = parse_regime(value);
  else if (key == "t_max") config.t_max = parse_double(key, value);
  else if (key == "steps") config.steps = parse_count(key, value);
  else if (key == "n_modes") config.n_modes = parse_count(key, value);
  else if (key == "max_modes") config.max_modes = parse_count(key, value);
  else if (key == "k_max") config.k_max = parse_count(key, value);
  else if (key == "plot_intervals") config.plot_intervals = parse_count(key, value);
  else if (key == "mu") config.mu = parse_count(key, value);
  else if (key == "nu") config.nu = parse_count(key, value);
  else if (key == "delta_threshold") config.delta_threshold = parse_double(key, value);
  else if (key == "root_tol") config.root_tol = parse_double(key, value);
  else if (key == "quad_tol") config.quad_tol = parse_double(key, value);
  else if (key == "out") config.out = std::string(value);
  else if (key == "svg") config.svg = parse_bool(key, value);
  else throw InvalidArgument("unknown configuration key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str());
}

void resolve_warnings(RunConfig& config) {
  if (config.delta && config.radius) {
    config.warnings.emplace_back("both delta and radius given; using delta and ignoring radius");
  }
}

}  // namespace dressed::cli
