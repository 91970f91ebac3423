#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covertbeam/scenario.hpp"
#include "covertbeam/solver.hpp"

namespace covertbeam {

// Antenna-count sweep: per count, the optimized rate averaged over channel
// realizations, the planar-baseline rate, and the gap against the grid
// oracle (computed on means). Channels for realization r of sweep point i
// are drawn from derive_seed(seed, i, r), so reruns are bit-identical and
// realizations parallelize over disjoint streams.
struct NaSweepRow {
  std::size_t n_a = 0;
  double rate3d_mean = 0.0;
  double rate3d_std = 0.0;
  double rate2d_mean = 0.0;
  double oracle_mean = 0.0;
  double gap = 0.0;          // (oracle_mean - rate3d_mean) / oracle_mean
  double margin_min = 0.0;   // worst covertness margin across realizations
  double iterations_mean = 0.0;
};
struct NaSweepResult {
  std::vector<NaSweepRow> rows;
};
NaSweepResult run_sweep_na(const ScenarioConfig& base, std::vector<std::size_t> na_list,
                           int realizations);

// Warden-location sweep, one curve per (P_a_max, P_j_max) pair. Channel
// realizations are shared across pairs so curve comparisons are paired.
struct PowerPair {
  double pa_max = 0.0;
  double pj_max = 0.0;
};
struct XwSweepResult {
  std::vector<double> xw;
  std::vector<PowerPair> pairs;
  std::vector<std::vector<double>> mean_rate;   // [pair][xw]
  std::vector<std::vector<double>> margin_min;  // [pair][xw]
};
XwSweepResult run_sweep_xw(const ScenarioConfig& base, std::vector<double> xw_list,
                           std::vector<PowerPair> pairs, int realizations);

// Objective trace of a single optimization run (realization 0).
struct ConvergenceResult {
  std::vector<double> trace;
  bool converged = false;
  bool infeasible_covert = false;
  bool warden_near_cap = false;
};
ConvergenceResult run_convergence_trace(const ScenarioConfig& scenario);

// Closed-form detection probabilities versus the finite-observation
// simulator at the operating point of a converged run.
struct McValidationRow {
  std::uint64_t n = 0;
  double pfa_mc = 0.0;
  double pfa_closed = 0.0;
  double pmd_mc = 0.0;
  double pmd_closed = 0.0;
  double err_fa = 0.0;
  double err_md = 0.0;
};
struct McValidationResult {
  std::vector<McValidationRow> rows;
  double p_a = 0.0;
  double tr_wj = 0.0;
  double phi_a = 0.0;
  double vartheta = 0.0;
  bool infeasible_covert = false;
  bool warden_near_cap = false;
};
McValidationResult run_mc_validation(const ScenarioConfig& scenario,
                                     std::vector<std::uint64_t> n_list);

// CSV rendering: header row, '.' decimal separator, LF line endings.
std::string render_na_csv(const NaSweepResult& result);
std::string render_gap_csv(const NaSweepResult& result);
std::string render_xw_csv(const XwSweepResult& result);
std::string render_convergence_csv(const ConvergenceResult& result);
std::string render_mc_csv(const McValidationResult& result);

// Matplotlib companion script plotting every column of the CSV against the
// first one.
std::string render_plot_script(const std::string& csv_filename);

struct WrittenFiles {
  std::string csv_path;
  std::string plot_path;
};
// Writes <experiment>_seed<seed>.csv and a matching _plot.py under out_dir.
WrittenFiles write_outputs(const std::string& out_dir, const std::string& experiment,
                           std::uint64_t seed, const std::string& csv_content);

}  // namespace covertbeam
