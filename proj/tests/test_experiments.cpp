#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "covertbeam/experiments.hpp"

using namespace covertbeam;

namespace {

ScenarioConfig fast_scenario() {
  ScenarioConfig sc;
  sc.realizations = 3;
  sc.solver.grid_pa = 41;
  sc.solver.grid_phi = 37;
  return sc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("empty config text yields the default scenario") {
  const ScenarioConfig cfg = parse_config("", "empty");
  CHECK(cfg.epsilon == 0.1);
  CHECK(cfg.omega_max_db == 17.0);
  CHECK(cfg.phi_3db_deg == 10.0);
  CHECK(cfg.theta_3db_deg == 70.0);
  CHECK(cfg.alpha == 4.0);
  CHECK(cfg.sigma2_b_dbw == -30.0);
  CHECK(cfg.sigma2_w_dbw == -30.0);
  CHECK(cfg.n_j == 8);
  CHECK(cfg.p_t == 0.5);
  CHECK(cfg.delta_z_m == 7.5);
  CHECK(cfg.jammer_x == 0.0);
  CHECK(cfg.jammer_y == -10.0);
  CHECK(cfg.bob_x == 10.0);
  CHECK(cfg.willie_x == 8.0);
  CHECK(cfg.p_a_max_w == 0.5);
  CHECK(cfg.p_j_max_w == 0.5);
  CHECK(cfg.sigma2_w_w() == doctest::Approx(1e-3).epsilon(1e-15));
}

TEST_CASE("config overrides change only the named key") {
  const ScenarioConfig cfg = parse_config("willie_x = 8\n", "t");
  const ScenarioConfig def = parse_config("", "t");
  CHECK(cfg.willie_x == 8.0);
  CHECK(cfg.bob_x == def.bob_x);
  const ScenarioConfig moved = parse_config("willie_x = 5.5 # closer\n", "t");
  CHECK(moved.willie_x == 5.5);
  CHECK(moved.bob_x == def.bob_x);
}

TEST_CASE("invalid epsilon is rejected by name") {
  try {
    parse_config("epsilon = 1.5\n", "bad");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected with their location") {
  try {
    parse_config("# comment\nnot_a_key = 3\n", "cfg.txt");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("not_a_key") != std::string::npos);
    CHECK(msg.find("cfg.txt:2") != std::string::npos);
  }
}

TEST_CASE("malformed lines and values are rejected") {
  CHECK_THROWS_AS(parse_config("epsilon 0.1\n", "t"), ConfigError);
  CHECK_THROWS_AS(parse_config("epsilon = zero\n", "t"), ConfigError);
  CHECK_THROWS_AS(parse_config("covertness_mode = loose\n", "t"), ConfigError);
  CHECK_THROWS_AS(load_config("/no/such/file.conf"), ConfigError);
}

TEST_CASE("unit conversions are bit-stable") {
  const ScenarioConfig cfg = parse_config("sigma2_w_dbw = -30\nphi_3db_deg = 10\n", "t");
  for (int i = 0; i < 5; ++i) {
    CHECK(cfg.sigma2_w_w() == std::pow(10.0, -3.0));
    CHECK(cfg.pattern(0.0).phi_3db == 10.0 * M_PI / 180.0);
  }
}

TEST_CASE("antenna-count sweep: 3D beats planar, rates grow, rows are covert") {
  ScenarioConfig sc = fast_scenario();
  sc.realizations = 20;
  const NaSweepResult result = run_sweep_na(sc, {2, 4, 8}, sc.realizations);
  REQUIRE(result.rows.size() == 3);
  double prev = -1.0;
  for (const NaSweepRow& row : result.rows) {
    CHECK(row.rate3d_mean > row.rate2d_mean);
    CHECK(row.rate3d_mean >= prev - 1e-9);
    CHECK(row.margin_min >= -1e-9);
    prev = row.rate3d_mean;
  }
}

TEST_CASE("antenna-count sweep rows arrive sorted") {
  const NaSweepResult result = run_sweep_na(fast_scenario(), {8, 2}, 2);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].n_a == 2);
  CHECK(result.rows[1].n_a == 8);
}

TEST_CASE("warden-location sweep: near-receiver wardens hurt, jammer power helps") {
  ScenarioConfig sc = fast_scenario();
  sc.realizations = 10;
  const std::vector<PowerPair> pairs{{0.5, 0.5}, {0.5, 1.0}};
  const XwSweepResult result = run_sweep_xw(sc, {2.0, 10.0}, pairs, sc.realizations);
  REQUIRE(result.xw.size() == 2);
  CHECK(result.mean_rate[0][1] < result.mean_rate[0][0]);  // x_w=10 worse than x_w=2
  for (std::size_t ix = 0; ix < result.xw.size(); ++ix)
    CHECK(result.mean_rate[1][ix] >= result.mean_rate[0][ix] - 1e-9);
  for (const auto& margins : result.margin_min)
    for (double m : margins) CHECK(m >= -1e-9);
}

TEST_CASE("warden-location sweep without jammer power gives all-zero rates") {
  ScenarioConfig sc = fast_scenario();
  const XwSweepResult result = run_sweep_xw(sc, {4.0, 8.0}, {{0.5, 0.0}}, 2);
  for (double r : result.mean_rate[0]) CHECK(r == 0.0);
}

TEST_CASE("convergence trace is nondecreasing and stops under the threshold") {
  ScenarioConfig sc;
  const ConvergenceResult result = run_convergence_trace(sc);
  CHECK(result.converged);
  REQUIRE(result.trace.size() >= 2);
  for (std::size_t k = 1; k < result.trace.size(); ++k)
    CHECK(result.trace[k] >= result.trace[k - 1] - 1e-9);
  const std::size_t last = result.trace.size() - 1;
  CHECK(std::abs(result.trace[last] - result.trace[last - 1]) <= sc.solver.tau);
  CHECK(int(result.trace.size()) - 1 <= 20);
}

TEST_CASE("validation rows compare simulation against closed forms") {
  ScenarioConfig sc;
  sc.mc_trials = 400;  // quick smoke; tight tolerances live in the acceptance suite
  const McValidationResult result = run_mc_validation(sc, {100, 1000});
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].n == 100);
  CHECK(result.rows[1].n == 1000);
  CHECK(!result.infeasible_covert);
  for (const McValidationRow& row : result.rows) {
    CHECK(row.pfa_closed == result.rows[0].pfa_closed);
    CHECK(row.err_fa == doctest::Approx(std::abs(row.pfa_mc - row.pfa_closed)));
    CHECK(row.pfa_mc >= 0.0);
    CHECK(row.pmd_mc <= 1.0);
  }
}

TEST_CASE("CSV headers match the documented schemas") {
  NaSweepResult na;
  na.rows.push_back({4, 0.5, 0.1, 0.25, 0.55, 0.09, 0.01, 3.0});
  const std::string na_csv = render_na_csv(na);
  CHECK(na_csv.substr(0, na_csv.find('\n')) == "n_a,rate_3d,rate_2d,gap");
  CHECK(render_gap_csv(na).substr(0, 28) == "n_a,rate_asm,rate_oracle,gap");

  XwSweepResult xw;
  xw.xw = {2.0};
  xw.pairs = {{0.5, 0.5}, {1.0, 0.5}};
  xw.mean_rate = {{0.4}, {0.41}};
  xw.margin_min = {{0.0}, {0.0}};
  const std::string xw_csv = render_xw_csv(xw);
  CHECK(xw_csv.substr(0, xw_csv.find('\n')) == "x_w,rate_pa0.5_pj0.5,rate_pa1_pj0.5");

  ConvergenceResult conv;
  conv.trace = {0.1, 0.2};
  CHECK(render_convergence_csv(conv) == "iteration,rate\n0,0.10000000000000001\n1,0.20000000000000001\n");

  McValidationResult mc;
  mc.rows.push_back({100, 0.7, 0.71, 0.2, 0.21, 0.01, 0.01});
  const std::string mc_csv = render_mc_csv(mc);
  CHECK(mc_csv.substr(0, mc_csv.find('\n')) ==
        "n,pfa_mc,pfa_closed,pmd_mc,pmd_closed,err_fa,err_md");
}

TEST_CASE("fixed-seed mini sweep reproduces a golden CSV byte for byte") {
  ScenarioConfig sc = fast_scenario();
  sc.seed = 7;
  sc.realizations = 2;
  const NaSweepResult a = run_sweep_na(sc, {2}, 2);
  const NaSweepResult b = run_sweep_na(sc, {2}, 2);
  CHECK(render_na_csv(a) == render_na_csv(b));
  // frozen from a reference run; guards the sampling, solver, and formatting chain
  const std::string golden =
      "n_a,rate_3d,rate_2d,gap\n"
      "2,0.10661020897867057,0.0014111233284601781,-0.088891539951643839\n";
  CHECK(render_na_csv(a) == golden);
}

TEST_CASE("output files embed experiment name and seed, rewrites are idempotent") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "covertbeam_test_out";
  fs::remove_all(dir);
  ConvergenceResult conv;
  conv.trace = {0.0, 0.5};
  const std::string csv = render_convergence_csv(conv);
  const WrittenFiles f1 = write_outputs(dir.string(), "converge", 11, csv);
  CHECK(f1.csv_path.find("converge_seed11.csv") != std::string::npos);
  CHECK(fs::exists(f1.plot_path));
  const std::string first = slurp(f1.csv_path);
  const WrittenFiles f2 = write_outputs(dir.string(), "converge", 11, csv);
  CHECK(slurp(f2.csv_path) == first);
  const WrittenFiles f3 = write_outputs(dir.string(), "converge", 12, csv);
  CHECK(f3.csv_path != f1.csv_path);
  CHECK(slurp(f1.csv_path).find("iteration,rate\n") == 0);
  // LF endings only
  CHECK(first.find('\r') == std::string::npos);
  const std::string plot = slurp(f1.plot_path);
  CHECK(plot.find("converge_seed11.csv") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("unwritable output directory raises") {
  CHECK_THROWS_AS(write_outputs("/proc/no_such_dir", "x", 1, "a,b\n"),
                  std::runtime_error);
}
