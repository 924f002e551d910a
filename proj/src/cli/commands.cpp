#include "dressed/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>

#include "dressed/bipartite.hpp"
#include "dressed/cli/csv.hpp"
#include "dressed/cli/svg.hpp"
#include "dressed/coupling.hpp"
#include "dressed/dynamics.hpp"
#include "dressed/errors.hpp"
#include "dressed/oracle.hpp"
#include "dressed/spectrum.hpp"

namespace dressed::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

RootConfig root_config(const RunConfig& config) {
  RootConfig rc;
  rc.residual_tol = config.root_tol;
  return rc;
}

QuadratureConfig quad_config(const RunConfig& config) {
  QuadratureConfig qc;
  qc.abs_tol = config.quad_tol;
  return qc;
}

std::filesystem::path prepare_out(const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw Error("cannot create output directory " + config.out.string() + ": " + ec.message());
  return config.out;
}

void write_svg(const std::filesystem::path& path, const PlotSpec& spec, CommandResult& result) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << render_svg(spec);
  result.files.push_back(path);
}

void print_warnings(const RunConfig& config, std::ostream& log) {
  for (const auto& w : config.warnings) log << "warning: " << w << '\n';
}

void warn_on_tail(const RunConfig& config, std::ostream& log) {
  const double tail = atom_tail_estimate(config);
  if (tail > 1e-6) {
    log << "warning: atom weight beyond the retained modes is about " << format_real(tail)
        << " (> 1e-6); increase n_modes for the infinite-cavity limit\n";
  }
}

TransformMatrix n_mode_matrix(const DressedAtomParams& params, const RunConfig& config) {
  return build_matrix(solve_eigenfrequencies(params, root_config(config)));
}

void assert_pair_matrix(const ReducedAtomPairMatrix& m) {
  if (std::fabs(m.trace() - 1.0) > 1e-9) {
    throw InvariantViolation("reduced pair matrix trace " + format_real(m.trace()) + " at t = " +
                             format_real(m.time()));
  }
  const auto ev = m.eigenvalues();
  if (ev[0] < -1e-9) {
    throw InvariantViolation("reduced pair matrix has eigenvalue " + format_real(ev[0]) + " at t = " +
                             format_real(m.time()));
  }
}

}  // namespace

int exit_code_for(const std::exception& error) noexcept {
  if (dynamic_cast<const InvalidArgument*>(&error) != nullptr) return kUsage;
  if (dynamic_cast<const RegimeViolation*>(&error) != nullptr) return kUsage;
  if (dynamic_cast<const InvariantViolation*>(&error) != nullptr) return kInvariantViolation;
  return kNumericalFailure;
}

double atom_tail_estimate(const RunConfig& config) {
  const auto spectrum = solve_closed_form_eigenfrequencies(config.params_a(), root_config(config));
  return continuum_atom_row(spectrum).tail_deficit;
}

CommandResult run_spectrum(const RunConfig& config, std::ostream& log) {
  config.validate();
  if (config.plot_intervals < 1) throw InvalidArgument("plot_intervals must be at least 1 (empty mode range)");
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const auto params = config.params_a();
  const double to_angle = params.radius() / params.c();  // x = R Omega / c = pi Omega delta / g

  constexpr std::size_t per_interval = 400;
  PlotSeries cot_series{"cot(x)", {}, {}, "#1f77b4"};
  PlotSeries rhs_series{"right-hand side", {}, {}, "#d62728"};
  {
    CsvWriter csv(dir / "spectrum_curve.csv", {"x", "Omega", "cot", "rhs"});
    for (std::size_t j = 0; j <= config.plot_intervals; ++j) {
      for (std::size_t i = 0; i < per_interval; ++i) {
        const double x = kPi * (static_cast<double>(j) + (static_cast<double>(i) + 0.5) / per_interval);
        const double omega = x / to_angle;
        const double cot = 1.0 / std::tan(x);
        const double rhs = cavity_equation_rhs(params, omega);
        csv.cell(x).cell(omega).cell(cot).cell(rhs).end_row();
        cot_series.x.push_back(x);
        cot_series.y.push_back(cot);
        rhs_series.x.push_back(x);
        rhs_series.y.push_back(rhs);
      }
      // break the cotangent polyline at each asymptote
      cot_series.x.push_back(kPi * static_cast<double>(j + 1));
      cot_series.y.push_back(kNaN);
    }
    result.files.push_back(csv.path());
  }

  const auto spectrum = solve_closed_form_eigenfrequencies(params, root_config(config));
  const bool small = params.delta() < config.delta_threshold;
  std::vector<double> approx;
  if (small) approx = approx_small_cavity_spectrum(params, config.delta_threshold).bigomegas();
  PlotSeries roots_series{"normal frequencies", {}, {}, "#2ca02c"};
  roots_series.markers = true;
  {
    CsvWriter csv(dir / "spectrum_roots.csv",
                  {"r", "Omega_r", "x_r", "asymptote_below", "Omega_r_small_cavity", "residual", "method"});
    for (std::size_t r = 0; r < spectrum.size(); ++r) {
      const double omega = spectrum.bigomegas()[r];
      const double residual = closed_form_residual(params, r, spectrum.gaps()[r]);
      csv.cell(r)
          .cell(omega)
          .cell(omega * to_angle)
          .cell(params.field_frequency(r))
          .cell(small ? approx[r] : kNaN)
          .cell(residual)
          .cell(to_string(spectrum.method()))
          .end_row();
      if (r <= config.plot_intervals) {
        roots_series.x.push_back(omega * to_angle);
        roots_series.y.push_back(cavity_equation_rhs(params, omega));
      }
    }
    result.files.push_back(csv.path());
  }
  log << "lowest normal frequency Omega_0 = " << format_real(spectrum.bigomegas()[0]);
  if (small) log << " (small-cavity estimate " << format_real(approx[0]) << ")";
  log << '\n';

  if (config.svg) {
    PlotSpec plot{"Cavity eigenfrequency equation", "x = R Omega / c", "y", {cot_series, rhs_series, roots_series},
                  std::make_pair(-10.0, 10.0)};
    write_svg(dir / "spectrum.svg", plot, result);
  }
  return result;
}

CommandResult run_amplitude(const RunConfig& config, std::ostream& log) {
  config.validate();
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const auto params = config.params_a();
  const auto times = time_grid(config.t_max, config.steps);
  const auto mu = Oscillator::from_index(config.mu);
  const auto nu = Oscillator::from_index(config.nu);

  AmplitudeTrace trace;
  std::optional<TransformMatrix> tm;
  switch (config.regime) {
    case Regime::small:
      if (!mu.is_atom() || !nu.is_atom()) throw InvalidArgument("the small-cavity series only provides f_00");
      trace = trace_small_cavity(params, times, config.k_max, config.delta_threshold);
      break;
    case Regime::free_space:
      if (!mu.is_atom() || !nu.is_atom()) throw InvalidArgument("the free-space closed form only provides f_00");
      trace = trace_free_space(FreeSpaceParams::from(params), times, quad_config(config));
      break;
    case Regime::exact:
      if (config.mu > config.n_modes || config.nu > config.n_modes) {
        throw InvalidArgument("mu and nu must not exceed n_modes");
      }
      tm.emplace(n_mode_matrix(params, config));
      trace = trace_discrete(*tm, mu, nu, times);
      warn_on_tail(config, log);
      break;
  }

  CsvWriter csv(dir / "amplitude.csv", {"t", "re_f", "im_f", "abs2_f", "method"});
  PlotSeries series{"|f|^2", {}, {}, "#1f77b4"};
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const auto f = trace.values[i];
    if (std::abs(f) > 1.0 + 1e-9) {
      throw InvariantViolation("|f| = " + format_real(std::abs(f)) + " exceeds 1 at t = " + format_real(trace.times[i]));
    }
    if (tm) {
      double norm = 0.0;
      for (const auto& x : amplitude_row(*tm, mu, trace.times[i])) norm += std::norm(x);
      if (std::fabs(norm - 1.0) > 1e-6) {
        throw InvariantViolation("unitarity broken: sum |f|^2 = " + format_real(norm));
      }
    }
    csv.cell(trace.times[i]).cell(f.real()).cell(f.imag()).cell(std::norm(f)).cell(to_string(trace.method)).end_row();
    series.x.push_back(trace.times[i]);
    series.y.push_back(std::norm(f));
  }
  result.files.push_back(csv.path());
  if (config.svg) {
    write_svg(dir / "amplitude.svg", PlotSpec{"Amplitude", "t", "|f|^2", {series}, std::nullopt}, result);
  }
  return result;
}

CommandResult run_impurity(const RunConfig& config, std::ostream& log) {
  config.validate();
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const SuperpositionSpec spec(config.xi, config.phi);
  const auto params_a = config.params_a();
  const auto params_b = config.params_b();
  const auto times = time_grid(config.t_max, config.steps);

  const bool small_ok = params_a.delta() < config.delta_threshold && params_b.delta() < config.delta_threshold;
  if (!small_ok) log << "warning: delta >= " << format_real(config.delta_threshold) << ", small-cavity column left empty\n";
  const bool free_ok = params_a.kappa_sq() > 0.0 && params_b.kappa_sq() > 0.0;
  if (!free_ok) log << "warning: kappa^2 <= 0, free-space column left empty\n";

  const auto tm_a = n_mode_matrix(params_a, config);
  const auto tm_b = config.identical() ? tm_a : n_mode_matrix(params_b, config);
  warn_on_tail(config, log);

  auto pair_impurity = [&](Complex f_aa, Complex f_bb, double t) {
    const auto m = reduced_pair_matrix(f_aa, f_bb, spec, t);
    assert_pair_matrix(m);
    const double d = impurity(m);
    if (d < -1e-12 || d > 0.5 + 1e-12) throw InvariantViolation("impurity outside [0, 1/2]");
    return d;
  };

  CsvWriter csv(dir / "impurity.csv", {"t", "D_small_cavity", "D_exact", "D_free_space"});
  PlotSeries small_series{"small cavity", {}, {}, "#1f77b4", true};
  PlotSeries exact_series{"N-mode cavity", {}, {}, "#2ca02c"};
  PlotSeries free_series{"free space", {}, {}, "#d62728"};
  const auto quad = quad_config(config);
  for (double t : times) {
    double d_small = kNaN, d_free = kNaN;
    if (small_ok) {
      const auto fa = amplitude_small_cavity(t, params_a, config.k_max, config.delta_threshold);
      const auto fb = config.identical() ? fa : amplitude_small_cavity(t, params_b, config.k_max, config.delta_threshold);
      d_small = pair_impurity(fa, fb, t);
    }
    if (free_ok) {
      const auto fa = amplitude_free_space(FreeSpaceParams::from(params_a), t, quad);
      const auto fb = config.identical() ? fa : amplitude_free_space(FreeSpaceParams::from(params_b), t, quad);
      d_free = pair_impurity(fa, fb, t);
    }
    const auto ea = amplitude_discrete(tm_a, Oscillator::atom(), Oscillator::atom(), t);
    const auto eb = config.identical() ? ea : amplitude_discrete(tm_b, Oscillator::atom(), Oscillator::atom(), t);
    const double d_exact = pair_impurity(ea, eb, t);

    csv.cell(t).cell(d_small).cell(d_exact).cell(d_free).end_row();
    small_series.x.push_back(t);
    small_series.y.push_back(d_small);
    exact_series.x.push_back(t);
    exact_series.y.push_back(d_exact);
    free_series.x.push_back(t);
    free_series.y.push_back(d_free);
  }
  result.files.push_back(csv.path());
  if (config.svg) {
    PlotSpec plot{"Degree of impurity", "t", "D", {small_series, free_series, exact_series}, std::make_pair(0.0, 0.55)};
    write_svg(dir / "impurity.svg", plot, result);
  }
  return result;
}

CommandResult run_entropy(const RunConfig& config, std::ostream& log) {
  config.validate();
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const SuperpositionSpec spec(config.xi, config.phi);
  const auto tm_a = n_mode_matrix(config.params_a(), config);
  const auto tm_b = config.identical() ? tm_a : n_mode_matrix(config.params_b(), config);
  const auto times = time_grid(config.t_max, config.steps);
  const double expected = entropy_closed_form(spec.xi());

  CsvWriter csv(dir / "bipartite.csv", {"t", "rho00", "rho0101", "rho1010", "re_coh", "im_coh", "D", "E"});
  double e0 = kNaN;
  double drift = 0.0;
  double closed_dev = 0.0;
  PlotSeries series{"E(t)", {}, {}, "#1f77b4"};
  for (double t : times) {
    auto row_a = amplitude_row(tm_a, Oscillator::atom(), t);
    const Complex f_aa = row_a.front();
    const Complex f_bb = config.identical() ? f_aa : amplitude_discrete(tm_b, Oscillator::atom(), Oscillator::atom(), t);
    const auto pair = reduced_pair_matrix(f_aa, f_bb, spec, t);
    assert_pair_matrix(pair);
    const double d = impurity(pair);
    const double e = von_neumann_entropy(single_atom_reduced(std::move(row_a), spec, t));
    if (std::isnan(e0)) e0 = e;
    drift = std::max(drift, std::fabs(e - e0));
    closed_dev = std::max(closed_dev, std::fabs(e - expected));
    const auto coh = pair.coherence_10_01();
    csv.cell(t).cell(pair.rho_00_00()).cell(pair.rho_01_01()).cell(pair.rho_10_10())
        .cell(coh.real()).cell(coh.imag()).cell(d).cell(e).end_row();
    series.x.push_back(t);
    series.y.push_back(e);
  }
  result.files.push_back(csv.path());
  log << "E(0) = " << format_real(e0) << ", closed form " << format_real(expected)
      << ", max |E(t) - E(0)| = " << format_real(drift) << ", max |E(t) - closed form| = " << format_real(closed_dev)
      << '\n';
  if (config.svg) {
    write_svg(dir / "entropy.svg", PlotSpec{"von Neumann entropy", "t", "E", {series}, std::nullopt}, result);
  }
  if (drift > 1e-8 || closed_dev > 1e-8) {
    log << "entropy is not constant to 1e-8\n";
    result.exit_code = kInvariantViolation;
  }
  return result;
}

CommandResult run_matrix_dump(const RunConfig& config, std::ostream& log) {
  config.validate();
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const auto tm = n_mode_matrix(config.params_a(), config);
  warn_on_tail(config, log);

  std::vector<std::string> header{"r", "Omega_r", "t_atom_r"};
  for (std::size_t k = 1; k < tm.size(); ++k) header.push_back("t_" + std::to_string(k) + "_r");
  CsvWriter csv(dir / "matrix.csv", std::move(header));
  for (std::size_t r = 0; r < tm.size(); ++r) {
    csv.cell(r).cell(tm.spectrum().bigomegas()[r]);
    for (std::size_t mu = 0; mu < tm.size(); ++mu) csv.cell(tm.element(Oscillator::from_index(mu), r));
    csv.end_row();
  }
  result.files.push_back(csv.path());
  return result;
}

std::vector<OracleCheck> oracle_checks(const RunConfig& config, const std::vector<std::size_t>& sizes) {
  std::vector<OracleCheck> checks;
  const auto times = time_grid(50.0, 101);
  for (std::size_t n : sizes) {
    RunConfig sized = config;
    sized.n_modes = n;
    const auto params = sized.params_a();
    const auto tm = n_mode_matrix(params, sized);
    const auto form = build_form(params);
    const auto decomp = diagonalize(form);
    const auto oracle_w = decomp.frequencies();
    const auto& v = decomp.vectors();
    const auto& t_mat = tm.matrix();
    const auto& bigomegas = tm.spectrum().bigomegas();

    double spectrum_rel = 0.0, elements = 0.0, ratio_err = 0.0;
    for (std::size_t r = 0; r <= n; ++r) {
      const auto ri = static_cast<Eigen::Index>(r);
      spectrum_rel = std::max(spectrum_rel, std::fabs(bigomegas[r] - oracle_w(ri)) / oracle_w(ri));
      for (std::size_t mu = 0; mu <= n; ++mu) {
        const auto mi = static_cast<Eigen::Index>(mu);
        elements = std::max(elements, std::fabs(std::fabs(t_mat(mi, ri)) - std::fabs(v(mi, ri))));
      }
      for (std::size_t k = 1; k <= n; ++k) {
        const double omega_k = params.field_frequency(k);
        const double predicted = params.eta() * omega_k / ((omega_k - oracle_w(ri)) * (omega_k + oracle_w(ri)));
        const double observed = v(static_cast<Eigen::Index>(k), ri) / v(0, ri);
        ratio_err = std::max(ratio_err, std::fabs(observed - predicted) / std::max(1.0, std::fabs(predicted)));
      }
    }

    double f00 = 0.0, unitarity = 0.0;
    for (double t : times) {
      const auto a = amplitude_discrete(tm, Oscillator::atom(), Oscillator::atom(), t);
      const auto b = oracle_amplitude(decomp, Oscillator::atom(), Oscillator::atom(), t);
      f00 = std::max(f00, std::abs(a - b));
      double norm = 0.0;
      for (const auto& f : amplitude_row(tm, Oscillator::atom(), t)) norm += std::norm(f);
      unitarity = std::max(unitarity, std::fabs(norm - 1.0));
    }

    Eigen::VectorXd omega_sq(static_cast<Eigen::Index>(n + 1));
    for (std::size_t r = 0; r <= n; ++r) omega_sq(static_cast<Eigen::Index>(r)) = bigomegas[r] * bigomegas[r];
    const Eigen::MatrixXd rebuilt = t_mat * omega_sq.asDiagonal() * t_mat.transpose();
    const double omega_n = params.field_frequency(n);
    const double reconstruction = (rebuilt - form.matrix).cwiseAbs().maxCoeff() / (omega_n * omega_n);

    checks.push_back({"spectrum_relative", n, spectrum_rel, 1e-8});
    checks.push_back({"abs_elements", n, elements, 1e-8});
    checks.push_back({"eigenvector_ratio", n, ratio_err, 1e-8});
    checks.push_back({"f00_absolute", n, f00, 1e-8});
    checks.push_back({"unitarity", n, unitarity, 1e-6});
    checks.push_back({"reconstruction", n, reconstruction, 1e-6});
  }
  return checks;
}

CommandResult run_oracle_check(const RunConfig& config, std::ostream& log) {
  config.validate();
  print_warnings(config, log);
  CommandResult result;
  const auto dir = prepare_out(config);
  const auto checks = oracle_checks(config, {10, 50, 200});
  CsvWriter csv(dir / "oracle_check.csv", {"check", "n_modes", "value", "tolerance", "status"});
  for (const auto& c : checks) {
    const char* status = c.pass() ? "PASS" : "FAIL";
    char line[160];
    std::snprintf(line, sizeof line, "%s  %-18s N=%-4zu value=%.3e  tol=%.0e\n", status, c.name.c_str(), c.n_modes,
                  c.value, c.tolerance);
    log << line;
    csv.cell(std::string_view(c.name)).cell(c.n_modes).cell(c.value).cell(c.tolerance).cell(std::string_view(status)).end_row();
    if (!c.pass()) result.exit_code = kInvariantViolation;
  }
  result.files.push_back(csv.path());
  return result;
}

}  // namespace dressed::cli
