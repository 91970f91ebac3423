#include "covertbeam/solver.hpp"

#include <algorithm>
#include <cmath>

#include "covertbeam/rng.hpp"

namespace covertbeam {

namespace {

constexpr double kMarginTol = 1e-9;
constexpr double kHalfPi = M_PI / 2.0;

// Scenario pieces that stay fixed while (p_a, phi_a) vary.
struct LinkModel {
  NodeAngles ang_b;
  NodeAngles ang_w;
  AntennaPattern pat;       // tilt field overwritten per evaluation
  double aw_coef = 0.0;     // a = aw_coef * gain_w * p_a
  double jw_coef = 0.0;     // b = jw_coef * tr_wj
  double bob_snr_coef = 0.0;  // snr = bob_snr_coef * gain_b * p_a
  double sigma2_w = 0.0;
  double epsilon = 0.0;
  double p_t = 0.0;
  double pa_max = 0.0;
  CovertnessMode mode = CovertnessMode::exact;
};

LinkModel build_model(const ChannelSet& channels, const ScenarioConfig& scenario) {
  const NodeLayout layout = scenario.layout();
  LinkModel m;
  m.ang_b = layout.node_angles(NodeId::bob);
  m.ang_w = layout.node_angles(NodeId::willie);
  m.pat = scenario.pattern(0.0);
  m.aw_coef = layout.path_loss_from_alice(NodeId::willie) * channels.stats.sigma2_aw;
  m.jw_coef = layout.path_loss_from_jammer(NodeId::willie) * channels.stats.sigma2_jw;
  m.bob_snr_coef = layout.path_loss_from_alice(NodeId::bob) * norm2(channels.h_ab) /
                   scenario.sigma2_b_w();
  m.sigma2_w = scenario.sigma2_w_w();
  m.epsilon = scenario.epsilon;
  m.p_t = scenario.p_t;
  m.pa_max = scenario.p_a_max_w;
  m.mode = scenario.solver.covertness_mode;
  return m;
}

double gain_bob(const LinkModel& m, double phi_a) {
  AntennaPattern p = m.pat;
  p.phi_a = phi_a;
  return gain_linear(m.ang_b.theta, m.ang_b.phi, p);
}

double gain_willie(const LinkModel& m, double phi_a) {
  AntennaPattern p = m.pat;
  p.phi_a = phi_a;
  return gain_linear(m.ang_w.theta, m.ang_w.phi, p);
}

double model_rate(const LinkModel& m, double p_a, double phi_a) {
  return m.p_t * std::log2(1.0 + m.bob_snr_coef * p_a * gain_bob(m, phi_a));
}

bool covert_exact(double a, double b, double epsilon, double tol) {
  DetectionParams params;
  params.a = a;
  params.b = b;
  return min_error_sum(params) - (1.0 - epsilon) >= -tol;
}

// Literal surrogate inequality pair with the auxiliary variable eliminated at
// its binding value t = a - b:  b*ln(b/a) - (a - b)*ln(epsilon) <= 0.
bool covert_surrogate(double a, double b, double epsilon, double tol) {
  if (a <= 0.0 || b <= 0.0) return false;
  return b * std::log(b / a) - (a - b) * std::log(epsilon) <= tol;
}

// The power solve bisects with tol = 0, so accepted operating points carry
// nonnegative margin up to rounding; feasibility re-checks elsewhere use
// kMarginTol and therefore never reject a solved point.
bool covert_feasible(const LinkModel& m, double a, double b, double tol) {
  return m.mode == CovertnessMode::exact ? covert_exact(a, b, m.epsilon, tol)
                                         : covert_surrogate(a, b, m.epsilon, tol);
}

// Largest p in [0, pa_max] passing the covertness predicate, bisected to well
// below 1e-10 relative. In exact mode the feasible set is [0, p*]; in
// surrogate mode it is an interior interval, located by a descending scan.
double largest_feasible_power(const LinkModel& m, double gain_w, double tr_wj) {
  const double b = m.jw_coef * tr_wj;
  auto feasible = [&](double p) {
    return covert_feasible(m, m.aw_coef * gain_w * p, b, 0.0);
  };
  if (m.pa_max <= 0.0) return 0.0;
  if (feasible(m.pa_max)) return m.pa_max;

  double lo, hi;
  if (m.mode == CovertnessMode::exact) {
    lo = 0.0;  // a = 0 is always covert
    hi = m.pa_max;
  } else {
    const int scan = 1 << 16;
    int k = scan - 1;
    while (k >= 1 && !feasible(m.pa_max * k / scan)) --k;
    if (k < 1) return 0.0;
    lo = m.pa_max * k / scan;
    hi = m.pa_max * (k + 1) / scan;
  }
  for (int i = 0; i < 120 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

PowerSolution solve_power_at(const LinkModel& m, double phi_a, const ChannelSet& channels,
                             const ScenarioConfig& scenario) {
  PowerSolution sol;
  const bool can_jam = scenario.n_j >= 2 && scenario.p_j_max_w > 0.0;
  sol.w_cov = can_jam ? design_jammer_covariance(channels.h_jb, scenario.p_j_max_w)
                      : HermitianMatrix::zero(scenario.n_j);
  const double tr = can_jam ? scenario.p_j_max_w : 0.0;
  const double gw = gain_willie(m, phi_a);
  sol.p_a = largest_feasible_power(m, gw, tr);
  sol.t = m.aw_coef * gw * sol.p_a - m.jw_coef * tr;
  sol.infeasible_covert = sol.p_a <= 0.0 && m.pa_max > 0.0;
  return sol;
}

// Linearized covertness predicate for the tilt step: the warden-side gain is
// replaced by its first-order model around phi_ref, the jammer term and (in
// surrogate mode) the auxiliary variable stay fixed.
bool tilt_feasible(const LinkModel& m, double phi, double phi_ref, double p_a, double b,
                   double t_fixed) {
  AntennaPattern p = m.pat;
  const double gw_lin =
      std::max(0.0, gain_linearized(m.ang_w.theta, m.ang_w.phi, phi, phi_ref, p));
  const double a = m.aw_coef * gw_lin * p_a;
  if (m.mode == CovertnessMode::exact) return covert_exact(a, b, m.epsilon, kMarginTol);
  if (a <= 0.0 || b <= 0.0) return false;
  return a - b <= t_fixed + kMarginTol &&
         b * std::log(b / a) - t_fixed * std::log(m.epsilon) <= kMarginTol;
}

// Boundary of the feasible tilt interval on one side of phi_ref, assuming
// phi_ref itself is feasible.
double tilt_boundary(const LinkModel& m, double phi_ref, double limit, double p_a,
                     double b, double t_fixed) {
  auto feas = [&](double phi) { return tilt_feasible(m, phi, phi_ref, p_a, b, t_fixed); };
  if (feas(limit)) return limit;
  double lo = phi_ref, hi = limit;  // lo feasible, hi infeasible
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (feas(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

double covert_rate(double p_a, double phi_a, const ComplexVector& w_j,
                   const ChannelSet& channels, const ScenarioConfig& scenario) {
  const NodeLayout layout = scenario.layout();
  const LinkModel m = build_model(channels, scenario);
  const double leak =
      w_j.empty() ? 0.0
                  : layout.path_loss_from_jammer(NodeId::bob) * std::norm(dot(w_j, channels.h_jb));
  const double snr = layout.path_loss_from_alice(NodeId::bob) * p_a * gain_bob(m, phi_a) *
                     norm2(channels.h_ab) / (leak + scenario.sigma2_b_w());
  return scenario.p_t * std::log2(1.0 + snr);
}

double covert_rate(double p_a, double phi_a, const HermitianMatrix& w_cov,
                   const ChannelSet& channels, const ScenarioConfig& scenario) {
  const NodeLayout layout = scenario.layout();
  const LinkModel m = build_model(channels, scenario);
  const double leak = w_cov.dim() > 0 ? layout.path_loss_from_jammer(NodeId::bob) *
                                            w_cov.quad_form(channels.h_jb)
                                      : 0.0;
  const double snr = layout.path_loss_from_alice(NodeId::bob) * p_a * gain_bob(m, phi_a) *
                     norm2(channels.h_ab) / (leak + scenario.sigma2_b_w());
  return scenario.p_t * std::log2(1.0 + snr);
}

CovertnessCheck check_covertness(double p_a, double tr_wj, double phi_a,
                                 const ScenarioConfig& scenario, double epsilon) {
  const DetectionParams params =
      effective_powers(p_a, tr_wj, scenario.layout(), scenario.pattern(phi_a),
                       scenario.channel_stats, scenario.sigma2_w_w());
  CovertnessCheck check;
  check.margin = min_error_sum(params) - (1.0 - epsilon);
  check.satisfied = check.margin >= -kMarginTol;
  return check;
}

PowerSolution solve_power_subproblem(double phi_a, const ChannelSet& channels,
                                     const ScenarioConfig& scenario) {
  const LinkModel m = build_model(channels, scenario);
  return solve_power_at(m, phi_a, channels, scenario);
}

TiltSolution solve_tilt_subproblem(const PowerSolution& power, double phi_a_prev,
                                   const ChannelSet& channels,
                                   const ScenarioConfig& scenario) {
  const LinkModel m = build_model(channels, scenario);
  const double delta0 = m.pat.phi_3db / 2.0;

  TiltSolution cur;
  cur.phi_a = phi_a_prev;
  cur.power = power;
  cur.rate = model_rate(m, power.p_a, phi_a_prev);

  double delta = delta0;
  const double b = m.jw_coef * cur.power.w_cov.trace();
  for (int inner = 0; inner < 60 && delta >= 1e-10; ++inner) {
    const double lo_lim = std::max(0.0, cur.phi_a - delta);
    const double hi_lim = std::min(kHalfPi, cur.phi_a + delta);
    const double p_cur = cur.power.p_a;
    const double t_cur = cur.power.t;

    double lo = cur.phi_a, hi = cur.phi_a;
    if (tilt_feasible(m, cur.phi_a, cur.phi_a, p_cur, b, t_cur)) {
      lo = tilt_boundary(m, cur.phi_a, lo_lim, p_cur, b, t_cur);
      hi = tilt_boundary(m, cur.phi_a, hi_lim, p_cur, b, t_cur);
    }

    // Candidate order: the endpoint maximizing the first-order objective
    // first; with a flat model, the side that gains covert slack first.
    const GainGradient gb = gain_gradient(m.ang_b.theta, m.ang_b.phi, cur.phi_a, m.pat);
    const GainGradient gw = gain_gradient(m.ang_w.theta, m.ang_w.phi, cur.phi_a, m.pat);
    double first = hi, second = lo;
    if (gb.value < 0.0 || (gb.value == 0.0 && gw.value > 0.0)) std::swap(first, second);

    bool accepted = false;
    for (const double cand : {first, second}) {
      if (cand == cur.phi_a) continue;
      PowerSolution pw = solve_power_at(m, cand, channels, scenario);
      const double r = model_rate(m, pw.p_a, cand);
      if (r > cur.rate) {
        cur.phi_a = cand;
        cur.power = pw;
        cur.rate = r;
        accepted = true;
        break;
      }
    }
    delta = accepted ? std::min(delta0, 2.0 * delta) : 0.5 * delta;
  }
  return cur;
}

Solution alternating_search(const ChannelSet& channels, const ScenarioConfig& scenario) {
  const LinkModel m = build_model(channels, scenario);
  const double phi0 = scenario.initial_tilt();

  Solution sol;
  sol.phi_a = phi0;
  PowerSolution pw = solve_power_at(m, phi0, channels, scenario);
  double rate = model_rate(m, pw.p_a, phi0);
  sol.iterations.push_back(rate);

  for (int k = 0; k < scenario.solver.max_iter; ++k) {
    TiltSolution ts = solve_tilt_subproblem(pw, sol.phi_a, channels, scenario);
    sol.phi_a = ts.phi_a;
    pw = ts.power;
    sol.iterations.push_back(ts.rate);
    const double change = std::abs(ts.rate - rate);
    rate = ts.rate;
    if (change <= scenario.solver.tau) {
      sol.converged = true;
      break;
    }
  }

  sol.p_a = pw.p_a;
  sol.w_cov = pw.w_cov;
  sol.t = pw.t;
  sol.rate = rate;
  sol.infeasible_covert = pw.infeasible_covert;

  const double tr = sol.w_cov.trace();
  if (tr > 0.0) {
    RandomizationObjective obj;
    obj.alice_power_mean = m.aw_coef * gain_willie(m, sol.phi_a) * sol.p_a;
    obj.jammer_power_per_unit = m.jw_coef;
    sol.w_j = gaussian_randomization(sol.w_cov, channels.h_jb, tr,
                                     derive_seed(scenario.seed, 0x72616e64u),
                                     scenario.solver.randomization_candidates, obj);
  } else {
    sol.w_j = ComplexVector(scenario.n_j);
  }

  sol.covertness_margin =
      check_covertness(sol.p_a, tr, sol.phi_a, scenario, scenario.epsilon).margin;
  AntennaPattern final_pat = m.pat;
  final_pat.phi_a = sol.phi_a;
  sol.warden_near_cap =
      attenuation_margin_db(m.ang_w.theta, m.ang_w.phi, final_pat) <= 0.5;
  return sol;
}

GridSolution exhaustive_search(const ChannelSet& channels, const ScenarioConfig& scenario,
                               int grid_pa, int grid_phi) {
  if (grid_pa < 2 || grid_phi < 2)
    throw std::invalid_argument("exhaustive_search: need >= 2 points per axis");
  const LinkModel m = build_model(channels, scenario);
  const bool can_jam = scenario.n_j >= 2 && scenario.p_j_max_w > 0.0;
  const double b = m.jw_coef * (can_jam ? scenario.p_j_max_w : 0.0);

  std::vector<double> gw(grid_phi), gbn(grid_phi);
  for (int j = 0; j < grid_phi; ++j) {
    const double phi = kHalfPi * j / (grid_phi - 1);
    gw[j] = gain_willie(m, phi);
    gbn[j] = gain_bob(m, phi);
  }

  GridSolution best;
  best.margin = scenario.epsilon;  // p_a = 0, phi_a = 0 is always covert
  bool found = false;
  for (int i = 0; i < grid_pa; ++i) {
    const double p = scenario.p_a_max_w * i / (grid_pa - 1);
    for (int j = 0; j < grid_phi; ++j) {
      DetectionParams params;
      params.a = m.aw_coef * gw[j] * p;
      params.b = b;
      const double margin = min_error_sum(params) - (1.0 - m.epsilon);
      if (margin < -kMarginTol) continue;
      const double rate = m.p_t * std::log2(1.0 + m.bob_snr_coef * p * gbn[j]);
      if (!found || rate > best.rate) {
        found = true;
        best.p_a = p;
        best.phi_a = kHalfPi * j / (grid_phi - 1);
        best.rate = rate;
        best.margin = margin;
      }
    }
  }
  return best;
}

PlanarSolution solve_planar_baseline(const ChannelSet& channels,
                                     const ScenarioConfig& scenario) {
  LinkModel m = build_model(channels, scenario);
  const double gw = gain2d_linear(m.ang_w.theta, m.pat);
  const double gb = gain2d_linear(m.ang_b.theta, m.pat);
  const bool can_jam = scenario.n_j >= 2 && scenario.p_j_max_w > 0.0;
  const double tr = can_jam ? scenario.p_j_max_w : 0.0;

  PlanarSolution sol;
  sol.p_a = largest_feasible_power(m, gw, tr);
  sol.rate = m.p_t * std::log2(1.0 + m.bob_snr_coef * sol.p_a * gb);
  DetectionParams params;
  params.a = m.aw_coef * gw * sol.p_a;
  params.b = m.jw_coef * tr;
  sol.margin = min_error_sum(params) - (1.0 - m.epsilon);
  sol.infeasible_covert = sol.p_a <= 0.0 && m.pa_max > 0.0;
  return sol;
}

}  // namespace covertbeam
