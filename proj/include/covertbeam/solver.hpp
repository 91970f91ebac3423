#pragma once

#include <vector>

#include "covertbeam/beamforming.hpp"
#include "covertbeam/channels.hpp"
#include "covertbeam/detection.hpp"
#include "covertbeam/scenario.hpp"

namespace covertbeam {

// Result of the joint power/tilt optimization for one channel realization.
struct Solution {
  double p_a = 0.0;                 // transmit power, W
  double phi_a = 0.0;               // tilt, radians
  HermitianMatrix w_cov;            // jammer covariance
  ComplexVector w_j;                // rank-one jammer beamformer
  double t = 0.0;                   // auxiliary variable (a - b at the solution)
  double rate = 0.0;                // objective, bits/s/Hz
  double covertness_margin = 0.0;   // min_error_sum - (1 - epsilon)
  std::vector<double> iterations;   // objective trace, entry 0 = after initial power solve
  bool converged = false;
  bool infeasible_covert = false;   // no positive covert power exists
  // The attenuation clip is active (or within 0.5 dB) toward the warden at
  // the final tilt; rates are then sensitive to the xi_max_db setting.
  bool warden_near_cap = false;
};

// Objective: p_t * log2(1 + d_ab^-alpha * p_a * gain(bob) * |h_ab|^2 / denom)
// where denom adds the jamming leakage at Bob (zero for null-space w_j).
double covert_rate(double p_a, double phi_a, const ComplexVector& w_j,
                   const ChannelSet& channels, const ScenarioConfig& scenario);
double covert_rate(double p_a, double phi_a, const HermitianMatrix& w_cov,
                   const ChannelSet& channels, const ScenarioConfig& scenario);

// Covertness feasibility of an operating point: margin >= -1e-9.
struct CovertnessCheck {
  bool satisfied = false;
  double margin = 0.0;
};
CovertnessCheck check_covertness(double p_a, double tr_wj, double phi_a,
                                 const ScenarioConfig& scenario, double epsilon);

struct PowerSolution {
  double p_a = 0.0;
  HermitianMatrix w_cov;
  double t = 0.0;
  bool infeasible_covert = false;
};

// Fixed-tilt subproblem. The objective does not involve the jammer covariance
// and grows with p_a, while the covertness constraint only loosens with
// Tr(W_j); so Tr(W_j) is pinned at the cap and the largest feasible p_a is
// found by bisection on the active covertness predicate (exact oracle or the
// surrogate inequality pair, per config).
PowerSolution solve_power_subproblem(double phi_a, const ChannelSet& channels,
                                     const ScenarioConfig& scenario);

// Tilt subproblem at fixed power. Candidate tilts come from maximizing the
// first-order gain model subject to the linearized covertness constraint
// inside a trust region of phi_3db/2; a candidate is accepted only when the
// true objective, after re-solving the power subproblem at the candidate,
// does not decrease. The trust region halves on rejection.
struct TiltSolution {
  double phi_a = 0.0;
  PowerSolution power;  // power subproblem re-solved at the accepted tilt
  double rate = 0.0;
};
TiltSolution solve_tilt_subproblem(const PowerSolution& power, double phi_a_prev,
                                   const ChannelSet& channels,
                                   const ScenarioConfig& scenario);

// Alternating search: power solve, tilt solve, repeat until the objective
// changes by at most tau or max_iter is hit. The returned solution carries a
// rank-one w_j recovered by randomization and is re-validated against the
// exact covertness oracle.
Solution alternating_search(const ChannelSet& channels, const ScenarioConfig& scenario);

// Dense-grid search over (p_a, phi_a) in [0, P_a_max] x [0, pi/2] with
// Tr(W_j) at the cap; keeps the best point that the exact covertness oracle
// accepts. Ties: lowest p_a, then lowest phi_a.
struct GridSolution {
  double p_a = 0.0;
  double phi_a = 0.0;
  double rate = 0.0;
  double margin = 0.0;
};
GridSolution exhaustive_search(const ChannelSet& channels, const ScenarioConfig& scenario,
                               int grid_pa, int grid_phi);

// Planar-pattern baseline: no vertical attenuation and no tilt variable,
// leaving only the power subproblem.
struct PlanarSolution {
  double p_a = 0.0;
  double rate = 0.0;
  double margin = 0.0;
  bool infeasible_covert = false;
};
PlanarSolution solve_planar_baseline(const ChannelSet& channels,
                                     const ScenarioConfig& scenario);

}  // namespace covertbeam
