// Command-line driver: reproducible sweeps and validation runs, emitting CSV
// plus a companion plot script per experiment.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covertbeam/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitInfeasible = 3;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int realizations = 0;
  std::string covertness_mode;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "scenario config file (flat key=value)");
  cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "master seed (overrides config)");
  cmd->add_option("--realizations", opt.realizations,
                  "channel realizations per sweep point (overrides config)");
  cmd->add_option("--covertness-mode", opt.covertness_mode,
                  "covertness constraint form: exact | surrogate");
}

void warn_cap_sensitivity(const covertbeam::ScenarioConfig& cfg) {
  std::cerr << "note: the attenuation cap (xi_max_db = " << cfg.xi_max_db
            << ") is active or nearly active toward the warden at the converged "
               "tilt; rates are sensitive to this setting\n";
}

covertbeam::ScenarioConfig make_scenario(const CommonOptions& opt, CLI::App* cmd) {
  covertbeam::ScenarioConfig cfg;
  if (!opt.config_path.empty()) cfg = covertbeam::load_config(opt.config_path);
  if (cmd->count("--seed") > 0) cfg.seed = opt.seed;
  if (cmd->count("--realizations") > 0) cfg.realizations = opt.realizations;
  if (!opt.covertness_mode.empty()) {
    if (opt.covertness_mode == "exact")
      cfg.solver.covertness_mode = covertbeam::CovertnessMode::exact;
    else if (opt.covertness_mode == "surrogate")
      cfg.solver.covertness_mode = covertbeam::CovertnessMode::surrogate;
    else
      throw covertbeam::ConfigError("--covertness-mode must be 'exact' or 'surrogate'");
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covert link design toolkit"};
  app.require_subcommand(1);

  CommonOptions na_opt, xw_opt, conv_opt, mc_opt, gap_opt;
  std::vector<std::size_t> na_list{2, 4, 6, 8};
  std::vector<double> xw_list{2, 4, 6, 8, 10, 12, 14};
  std::vector<double> pair_values;  // flattened pa,pj pairs
  std::vector<std::uint64_t> n_list{100, 1000, 10000, 100000};
  std::vector<std::size_t> gap_na_list{4, 8};

  CLI::App* sweep_na = app.add_subcommand(
      "sweep-na", "optimized rate vs transmit antenna count, with planar baseline");
  add_common(sweep_na, na_opt);
  sweep_na->add_option("--na-list", na_list, "antenna counts")->capture_default_str();

  CLI::App* sweep_xw = app.add_subcommand(
      "sweep-xw", "optimized rate vs warden location, one curve per power pair");
  add_common(sweep_xw, xw_opt);
  sweep_xw->add_option("--xw-list", xw_list, "warden x positions")->capture_default_str();
  sweep_xw->add_option("--power-pairs", pair_values,
                       "flattened pa_max pj_max pairs, e.g. 0.5 0.5 1.0 0.5");

  CLI::App* converge = app.add_subcommand("converge", "objective trace of a single run");
  add_common(converge, conv_opt);

  CLI::App* mc_validate = app.add_subcommand(
      "mc-validate", "closed-form vs simulated detection probabilities");
  add_common(mc_validate, mc_opt);
  mc_validate->add_option("--n-list", n_list, "observation lengths")->capture_default_str();

  CLI::App* gap = app.add_subcommand("gap", "optimizer vs grid-oracle rate");
  add_common(gap, gap_opt);
  gap->add_option("--na-list", gap_na_list, "antenna counts")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_na->parsed()) {
      const auto cfg = make_scenario(na_opt, sweep_na);
      const auto result = covertbeam::run_sweep_na(cfg, na_list, cfg.realizations);
      const auto files = covertbeam::write_outputs(na_opt.out_dir, "sweep_na", cfg.seed,
                                                   covertbeam::render_na_csv(result));
      std::cout << files.csv_path << '\n';
      const bool all_zero = std::all_of(result.rows.begin(), result.rows.end(),
                                        [](const auto& r) { return r.rate3d_mean <= 0.0; });
      return all_zero ? kExitInfeasible : kExitOk;
    }
    if (sweep_xw->parsed()) {
      const auto cfg = make_scenario(xw_opt, sweep_xw);
      std::vector<covertbeam::PowerPair> pairs;
      if (pair_values.empty()) {
        pairs = {{0.5, 0.5}, {1.0, 0.5}, {0.5, 1.0}};
      } else {
        if (pair_values.size() % 2 != 0)
          throw covertbeam::ConfigError("--power-pairs needs an even number of values");
        for (std::size_t i = 0; i < pair_values.size(); i += 2)
          pairs.push_back({pair_values[i], pair_values[i + 1]});
      }
      const auto result = covertbeam::run_sweep_xw(cfg, xw_list, pairs, cfg.realizations);
      const auto files = covertbeam::write_outputs(xw_opt.out_dir, "sweep_xw", cfg.seed,
                                                   covertbeam::render_xw_csv(result));
      std::cout << files.csv_path << '\n';
      bool any_positive = false;
      for (const auto& curve : result.mean_rate)
        for (double r : curve) any_positive |= r > 0.0;
      return any_positive ? kExitOk : kExitInfeasible;
    }
    if (converge->parsed()) {
      const auto cfg = make_scenario(conv_opt, converge);
      const auto result = covertbeam::run_convergence_trace(cfg);
      const auto files =
          covertbeam::write_outputs(conv_opt.out_dir, "converge", cfg.seed,
                                    covertbeam::render_convergence_csv(result));
      std::cout << files.csv_path << '\n';
      if (result.warden_near_cap) warn_cap_sensitivity(cfg);
      return result.infeasible_covert ? kExitInfeasible : kExitOk;
    }
    if (mc_validate->parsed()) {
      const auto cfg = make_scenario(mc_opt, mc_validate);
      const auto result = covertbeam::run_mc_validation(cfg, n_list);
      const auto files = covertbeam::write_outputs(mc_opt.out_dir, "mc_validate", cfg.seed,
                                                   covertbeam::render_mc_csv(result));
      std::cout << files.csv_path << '\n';
      if (result.warden_near_cap) warn_cap_sensitivity(cfg);
      return result.infeasible_covert ? kExitInfeasible : kExitOk;
    }
    if (gap->parsed()) {
      const auto cfg = make_scenario(gap_opt, gap);
      const auto result = covertbeam::run_sweep_na(cfg, gap_na_list, cfg.realizations);
      const auto files = covertbeam::write_outputs(gap_opt.out_dir, "gap", cfg.seed,
                                                   covertbeam::render_gap_csv(result));
      std::cout << files.csv_path << '\n';
      const bool all_zero = std::all_of(result.rows.begin(), result.rows.end(),
                                        [](const auto& r) { return r.rate3d_mean <= 0.0; });
      return all_zero ? kExitInfeasible : kExitOk;
    }
  } catch (const covertbeam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
