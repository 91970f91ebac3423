#include "covertbeam/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "covertbeam/rng.hpp"

namespace covertbeam {

namespace {

void parallel_for(int n, const std::function<void(int)>& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int threads = std::min<int>(hw, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&, t]() {
      for (int i = t; i < n; i += threads) fn(i);
    });
  for (auto& w : workers) w.join();
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Compact value for embedding in a column name (0.5 -> "0.5", 1.0 -> "1").
std::string fmt_compact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / double(v.size());
}

double sample_std(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / double(v.size() - 1));
}

}  // namespace

NaSweepResult run_sweep_na(const ScenarioConfig& base, std::vector<std::size_t> na_list,
                           int realizations) {
  std::sort(na_list.begin(), na_list.end());
  NaSweepResult result;
  for (std::size_t idx = 0; idx < na_list.size(); ++idx) {
    ScenarioConfig scenario = base;
    scenario.n_a = na_list[idx];
    scenario.validate();

    std::vector<double> rate3d(realizations), rate2d(realizations),
        oracle(realizations), margin(realizations), iters(realizations);
    parallel_for(realizations, [&](int r) {
      const ChannelSet ch = sample_channels(derive_seed(base.seed, idx, r),
                                            scenario.n_a, scenario.n_j,
                                            scenario.channel_stats);
      const Solution sol = alternating_search(ch, scenario);
      rate3d[r] = sol.rate;
      margin[r] = sol.covertness_margin;
      iters[r] = double(sol.iterations.size()) - 1.0;
      rate2d[r] = solve_planar_baseline(ch, scenario).rate;
      oracle[r] = exhaustive_search(ch, scenario, scenario.solver.grid_pa,
                                    scenario.solver.grid_phi)
                      .rate;
    });

    NaSweepRow row;
    row.n_a = na_list[idx];
    row.rate3d_mean = mean_of(rate3d);
    row.rate3d_std = sample_std(rate3d, row.rate3d_mean);
    row.rate2d_mean = mean_of(rate2d);
    row.oracle_mean = mean_of(oracle);
    row.gap = row.oracle_mean > 0.0
                  ? (row.oracle_mean - row.rate3d_mean) / row.oracle_mean
                  : 0.0;
    row.margin_min = *std::min_element(margin.begin(), margin.end());
    row.iterations_mean = mean_of(iters);
    result.rows.push_back(row);
  }
  return result;
}

XwSweepResult run_sweep_xw(const ScenarioConfig& base, std::vector<double> xw_list,
                           std::vector<PowerPair> pairs, int realizations) {
  std::sort(xw_list.begin(), xw_list.end());
  XwSweepResult result;
  result.xw = xw_list;
  result.pairs = pairs;
  result.mean_rate.assign(pairs.size(), std::vector<double>(xw_list.size(), 0.0));
  result.margin_min.assign(pairs.size(), std::vector<double>(xw_list.size(), 0.0));

  for (std::size_t ix = 0; ix < xw_list.size(); ++ix) {
    std::vector<ScenarioConfig> scenarios;
    for (const PowerPair& pair : pairs) {
      ScenarioConfig scenario = base;
      scenario.willie_x = xw_list[ix];
      scenario.p_a_max_w = pair.pa_max;
      scenario.p_j_max_w = pair.pj_max;
      scenario.validate();
      scenarios.push_back(scenario);
    }
    std::vector<std::vector<double>> rates(pairs.size(),
                                           std::vector<double>(realizations, 0.0));
    std::vector<std::vector<double>> margins(pairs.size(),
                                             std::vector<double>(realizations, 0.0));
    parallel_for(realizations, [&](int r) {
      // one channel draw per (location, realization), shared across pairs
      const ChannelSet ch = sample_channels(derive_seed(base.seed, ix, r), base.n_a,
                                            base.n_j, base.channel_stats);
      for (std::size_t ip = 0; ip < pairs.size(); ++ip) {
        const Solution sol = alternating_search(ch, scenarios[ip]);
        rates[ip][r] = sol.rate;
        margins[ip][r] = sol.covertness_margin;
      }
    });
    for (std::size_t ip = 0; ip < pairs.size(); ++ip) {
      result.mean_rate[ip][ix] = mean_of(rates[ip]);
      result.margin_min[ip][ix] =
          *std::min_element(margins[ip].begin(), margins[ip].end());
    }
  }
  return result;
}

ConvergenceResult run_convergence_trace(const ScenarioConfig& scenario) {
  const ChannelSet ch = sample_channels(derive_seed(scenario.seed, 0, 0), scenario.n_a,
                                        scenario.n_j, scenario.channel_stats);
  const Solution sol = alternating_search(ch, scenario);
  ConvergenceResult result;
  result.trace = sol.iterations;
  result.converged = sol.converged;
  result.infeasible_covert = sol.infeasible_covert;
  result.warden_near_cap = sol.warden_near_cap;
  return result;
}

McValidationResult run_mc_validation(const ScenarioConfig& scenario,
                                     std::vector<std::uint64_t> n_list) {
  std::sort(n_list.begin(), n_list.end());
  const ChannelSet ch = sample_channels(derive_seed(scenario.seed, 0, 0), scenario.n_a,
                                        scenario.n_j, scenario.channel_stats);
  const Solution sol = alternating_search(ch, scenario);

  McValidationResult result;
  result.p_a = sol.p_a;
  result.tr_wj = sol.w_cov.trace();
  result.phi_a = sol.phi_a;
  result.infeasible_covert = sol.infeasible_covert;
  result.warden_near_cap = sol.warden_near_cap;

  const DetectionParams params =
      effective_powers(sol.p_a, result.tr_wj, scenario.layout(),
                       scenario.pattern(sol.phi_a), scenario.channel_stats,
                       scenario.sigma2_w_w());
  result.vartheta = optimal_threshold(params);
  const double pfa_cf = pfa(result.vartheta, params);
  const double pmd_cf = pmd(result.vartheta, params);

  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const RadiometerEstimate est = simulate_radiometer(
        derive_seed(scenario.seed, i, 1), sol.p_a, sol.w_j, sol.phi_a,
        scenario.layout(), scenario.pattern(sol.phi_a), scenario.channel_stats,
        scenario.sigma2_w_w(), scenario.n_a, n_list[i], scenario.mc_trials,
        result.vartheta);
    McValidationRow row;
    row.n = n_list[i];
    row.pfa_mc = est.pfa_hat;
    row.pfa_closed = pfa_cf;
    row.pmd_mc = est.pmd_hat;
    row.pmd_closed = pmd_cf;
    row.err_fa = std::abs(est.pfa_hat - pfa_cf);
    row.err_md = std::abs(est.pmd_hat - pmd_cf);
    result.rows.push_back(row);
  }
  return result;
}

std::string render_na_csv(const NaSweepResult& result) {
  std::ostringstream out;
  out << "n_a,rate_3d,rate_2d,gap\n";
  for (const NaSweepRow& row : result.rows)
    out << row.n_a << ',' << fmt_double(row.rate3d_mean) << ','
        << fmt_double(row.rate2d_mean) << ',' << fmt_double(row.gap) << '\n';
  return out.str();
}

std::string render_gap_csv(const NaSweepResult& result) {
  std::ostringstream out;
  out << "n_a,rate_asm,rate_oracle,gap\n";
  for (const NaSweepRow& row : result.rows)
    out << row.n_a << ',' << fmt_double(row.rate3d_mean) << ','
        << fmt_double(row.oracle_mean) << ',' << fmt_double(row.gap) << '\n';
  return out.str();
}

std::string render_xw_csv(const XwSweepResult& result) {
  std::ostringstream out;
  out << "x_w";
  for (const PowerPair& p : result.pairs)
    out << ",rate_pa" << fmt_compact(p.pa_max) << "_pj" << fmt_compact(p.pj_max);
  out << '\n';
  for (std::size_t ix = 0; ix < result.xw.size(); ++ix) {
    out << fmt_double(result.xw[ix]);
    for (std::size_t ip = 0; ip < result.pairs.size(); ++ip)
      out << ',' << fmt_double(result.mean_rate[ip][ix]);
    out << '\n';
  }
  return out.str();
}

std::string render_convergence_csv(const ConvergenceResult& result) {
  std::ostringstream out;
  out << "iteration,rate\n";
  for (std::size_t k = 0; k < result.trace.size(); ++k)
    out << k << ',' << fmt_double(result.trace[k]) << '\n';
  return out.str();
}

std::string render_mc_csv(const McValidationResult& result) {
  std::ostringstream out;
  out << "n,pfa_mc,pfa_closed,pmd_mc,pmd_closed,err_fa,err_md\n";
  for (const McValidationRow& row : result.rows)
    out << row.n << ',' << fmt_double(row.pfa_mc) << ',' << fmt_double(row.pfa_closed)
        << ',' << fmt_double(row.pmd_mc) << ',' << fmt_double(row.pmd_closed) << ','
        << fmt_double(row.err_fa) << ',' << fmt_double(row.err_md) << '\n';
  return out.str();
}

std::string render_plot_script(const std::string& csv_filename) {
  std::ostringstream out;
  out << "#!/usr/bin/env python3\n"
         "import csv\n"
         "import os\n"
         "import matplotlib\n"
         "matplotlib.use(\"Agg\")\n"
         "import matplotlib.pyplot as plt\n"
         "\n"
         "here = os.path.dirname(os.path.abspath(__file__))\n"
         "path = os.path.join(here, \""
      << csv_filename
      << "\")\n"
         "with open(path) as f:\n"
         "    rows = list(csv.reader(f))\n"
         "header, data = rows[0], rows[1:]\n"
         "cols = list(zip(*[[float(v) for v in r] for r in data]))\n"
         "fig, ax = plt.subplots(figsize=(6, 4))\n"
         "for name, col in zip(header[1:], cols[1:]):\n"
         "    ax.plot(cols[0], col, marker=\"o\", label=name)\n"
         "ax.set_xlabel(header[0])\n"
         "ax.set_ylabel(\"bits/s/Hz\")\n"
         "ax.grid(True, alpha=0.3)\n"
         "ax.legend()\n"
         "fig.tight_layout()\n"
         "fig.savefig(path.replace(\".csv\", \".png\"), dpi=150)\n"
         "print(\"wrote\", path.replace(\".csv\", \".png\"))\n";
  return out.str();
}

WrittenFiles write_outputs(const std::string& out_dir, const std::string& experiment,
                           std::uint64_t seed, const std::string& csv_content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);

  const std::string stem = experiment + "_seed" + std::to_string(seed);
  WrittenFiles files;
  files.csv_path = (fs::path(out_dir) / (stem + ".csv")).string();
  files.plot_path = (fs::path(out_dir) / (stem + "_plot.py")).string();

  std::ofstream csv(files.csv_path, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + files.csv_path);
  csv << csv_content;

  std::ofstream plot(files.plot_path, std::ios::binary);
  if (!plot) throw std::runtime_error("cannot write " + files.plot_path);
  plot << render_plot_script(stem + ".csv");
  return files;
}

}  // namespace covertbeam
