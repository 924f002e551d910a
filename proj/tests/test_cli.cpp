#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dressed/cli/commands.hpp"
#include "dressed/cli/config.hpp"
#include "dressed/cli/csv.hpp"
#include "dressed/cli/svg.hpp"
#include "dressed/errors.hpp"

namespace dressed::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliOutput : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir = fs::temp_directory_path() / (std::string("dressed_cli_") + info->name());
    fs::remove_all(dir);
    config.out = dir;
    config.steps = 41;
    config.t_max = 10.0;
    config.n_modes = 40;
  }
  void TearDown() override { fs::remove_all(dir); }

  fs::path dir;
  RunConfig config;
  std::ostringstream log;
};

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_TRUE(c.identical());
  const auto p = c.params_a();
  EXPECT_DOUBLE_EQ(p.delta(), 0.1);
  EXPECT_DOUBLE_EQ(p.g(), 0.5);
  EXPECT_DOUBLE_EQ(p.omega_bar(), 1.0);
  EXPECT_EQ(c.regime, Regime::small);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, ParsesText) {
  RunConfig c;
  apply_config_text(c, "# figure\n g = 0.25\nradius=3.0\n\nregime = exact # trailing\nsteps=11\nphi=1.5\n");
  EXPECT_DOUBLE_EQ(c.atom_a.g, 0.25);
  ASSERT_TRUE(c.radius.has_value());
  EXPECT_DOUBLE_EQ(*c.radius, 3.0);
  EXPECT_EQ(c.regime, Regime::exact);
  EXPECT_EQ(c.steps, 11u);
  EXPECT_DOUBLE_EQ(c.phi, 1.5);
  EXPECT_NEAR(c.params_a().radius(), 3.0, 1e-15);
}

TEST(Config, DeltaWinsOverRadius) {
  RunConfig c;
  apply_setting(c, "radius", "2.0");
  apply_setting(c, "delta", "0.05");
  resolve_warnings(c);
  EXPECT_DOUBLE_EQ(c.params_a().delta(), 0.05);
  ASSERT_EQ(c.warnings.size(), 1u);
}

TEST(Config, SecondAtomSharesCavity) {
  RunConfig c;
  apply_setting(c, "delta", "0.1");
  apply_setting(c, "g_b", "0.3");
  EXPECT_FALSE(c.identical());
  EXPECT_DOUBLE_EQ(c.params_b().radius(), c.params_a().radius());
  EXPECT_DOUBLE_EQ(c.params_b().g(), 0.3);
  EXPECT_NEAR(c.params_b().delta(), 0.06, 1e-15);
}

TEST(Config, RejectsBadInput) {
  RunConfig c;
  EXPECT_THROW(apply_setting(c, "colour", "red"), InvalidArgument);
  EXPECT_THROW(apply_setting(c, "g", "abc"), InvalidArgument);
  EXPECT_THROW(apply_setting(c, "g", "0.5x"), InvalidArgument);
  EXPECT_THROW(apply_setting(c, "steps", "-3"), InvalidArgument);
  EXPECT_THROW(apply_setting(c, "regime", "medium"), InvalidArgument);
  EXPECT_THROW(apply_config_text(c, "just words\n"), InvalidArgument);
  EXPECT_THROW(apply_config_file(c, "/nonexistent/dressed.cfg"), InvalidArgument);

  RunConfig big;
  big.n_modes = big.max_modes + 1;
  EXPECT_THROW(big.validate(), InvalidArgument);
  RunConfig zero;
  zero.n_modes = 0;
  EXPECT_THROW(zero.validate(), InvalidArgument);
  RunConfig xi;
  xi.xi = 1.0;
  EXPECT_THROW(xi.validate(), InvalidArgument);
}

TEST(Config, RegimeNames) {
  EXPECT_EQ(parse_regime("free-space"), Regime::free_space);
  EXPECT_EQ(to_string(Regime::free_space), "free-space");
  EXPECT_EQ(parse_regime(to_string(Regime::exact)), Regime::exact);
}

TEST(Csv, RealFormatRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) EXPECT_EQ(std::stod(format_real(x)), x);
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(std::nan("")), "nan");
}

TEST_F(CliOutput, CsvWriterChecksWidth) {
  fs::create_directories(dir);
  CsvWriter csv(dir / "w.csv", {"a", "b"});
  csv.cell(1.0).cell(std::size_t{2}).end_row();
  csv.cell(std::string_view("x"));
  EXPECT_THROW(csv.end_row(), Error);
  csv.cell(3.0);
  EXPECT_THROW(csv.cell(4.0), Error);
}

TEST(Svg, RendersSeriesAndLegend) {
  PlotSpec spec{"Title", "t", "D", {{"one", {0, 1, 2}, {0, 0.5, 0.2}}, {"two", {0, 2}, {0.1, 0.1}, "#d62728", true}},
                std::make_pair(0.0, 0.6)};
  const auto svg = render_svg(spec);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("one"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
}

TEST_F(CliOutput, SpectrumFiles) {
  config.svg = true;
  const auto r = run_spectrum(config, log);
  EXPECT_EQ(r.exit_code, kSuccess);
  const auto roots = lines(slurp(dir / "spectrum_roots.csv"));
  ASSERT_GE(roots.size(), 2u);
  EXPECT_EQ(roots[0], "r,Omega_r,x_r,asymptote_below,Omega_r_small_cavity,residual,method");
  EXPECT_NE(roots[1].find("0.9075453"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "spectrum_curve.csv"));
  EXPECT_TRUE(fs::exists(dir / "spectrum.svg"));
}

TEST_F(CliOutput, OutputIsDeterministic) {
  run_impurity(config, log);
  const auto first = slurp(dir / "impurity.csv");
  run_impurity(config, log);
  EXPECT_EQ(first, slurp(dir / "impurity.csv"));
  EXPECT_EQ(lines(first).size(), 42u);
}

TEST_F(CliOutput, ImpurityColumns) {
  run_impurity(config, log);
  const auto rows = lines(slurp(dir / "impurity.csv"));
  EXPECT_EQ(rows[0], "t,D_small_cavity,D_exact,D_free_space");
  std::vector<double> first;
  std::istringstream in(rows[1]);
  for (std::string cell; std::getline(in, cell, ',');) first.push_back(std::stod(cell));
  ASSERT_EQ(first.size(), 4u);
  EXPECT_EQ(first[0], 0.0);
  // the truncated series misses amplitude (t_0^0)^2 (4 delta / pi) / k_max at t = 0
  EXPECT_NEAR(first[1], 4.0 * 0.826829280451 * 0.4 / std::numbers::pi / 1e4, 1e-8);
  EXPECT_NEAR(first[2], 0.0, 1e-12);
  EXPECT_EQ(first[3], 0.0);
}

TEST_F(CliOutput, ImpurityLeavesSmallColumnEmptyForLargeCavity) {
  config.delta = 1.0;
  run_impurity(config, log);
  const auto rows = lines(slurp(dir / "impurity.csv"));
  EXPECT_EQ(rows[5].substr(rows[5].find(',') + 1, 3), "nan");
  EXPECT_NE(log.str().find("warning"), std::string::npos);
}

TEST_F(CliOutput, AmplitudeRegimes) {
  for (auto regime : {Regime::small, Regime::free_space, Regime::exact}) {
    config.regime = regime;
    EXPECT_EQ(run_amplitude(config, log).exit_code, kSuccess);
    const auto rows = lines(slurp(dir / "amplitude.csv"));
    ASSERT_EQ(rows.size(), 42u);
    EXPECT_EQ(rows[0], "t,re_f,im_f,abs2_f,method");
  }
  config.mu = 1;
  config.regime = Regime::small;
  EXPECT_THROW(run_amplitude(config, log), InvalidArgument);
}

TEST_F(CliOutput, EntropyIsConstant) {
  config.xi = 0.25;
  EXPECT_EQ(run_entropy(config, log).exit_code, kSuccess);
  const auto rows = lines(slurp(dir / "bipartite.csv"));
  ASSERT_EQ(rows.size(), 42u);
  const auto last = rows.back();
  EXPECT_NEAR(std::stod(last.substr(last.rfind(',') + 1)), 0.562335144619, 1e-8);
}

TEST_F(CliOutput, MatrixDump) {
  config.n_modes = 3;
  run_matrix_dump(config, log);
  const auto rows = lines(slurp(dir / "matrix.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].rfind("r,Omega_r,t_atom_r,t_1_r", 0), 0u);
}

TEST_F(CliOutput, OracleCheckPasses) {
  const auto r = run_oracle_check(config, log);
  EXPECT_EQ(r.exit_code, kSuccess);
  for (const auto& c : oracle_checks(config, {10})) EXPECT_TRUE(c.pass()) << c.name;
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(InvalidArgument("x")), kUsage);
  EXPECT_EQ(exit_code_for(RegimeViolation("x")), kUsage);
  EXPECT_EQ(exit_code_for(InvariantViolation("x")), kInvariantViolation);
  EXPECT_EQ(exit_code_for(QuadratureFailure("x")), kNumericalFailure);
  EXPECT_EQ(exit_code_for(ConvergenceFailure("x", 3)), kNumericalFailure);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(DRESSEDCAV_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliOutput, BinaryExitCodes) {
  const std::string out = " --out " + dir.string();
  EXPECT_EQ(run_binary("spectrum" + out), 0);
  EXPECT_EQ(run_binary("spectrum --delta -1" + out), 1);
  EXPECT_EQ(run_binary("impurity --n-modes 0" + out), 1);
  EXPECT_EQ(run_binary("amplitude --bogus" + out), 1);
  EXPECT_EQ(run_binary("no-such-command"), 1);
  EXPECT_EQ(run_binary("amplitude --regime free-space --g 2" + out), 1);
}

}  // namespace
}  // namespace dressed::cli
