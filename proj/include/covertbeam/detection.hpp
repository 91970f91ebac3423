#pragma once

#include <cstdint>

#include "covertbeam/antenna.hpp"
#include "covertbeam/channels.hpp"
#include "covertbeam/geometry.hpp"
#include "covertbeam/linalg.hpp"

namespace covertbeam {

// Mean received powers at the warden under the two hypotheses. The warden's
// excess power over noise is exponentially distributed with mean b when only
// the jammer transmits, and the sum of two exponentials (means a and b) when
// the transmitter is active.
struct DetectionParams {
  double a = 0.0;         // mean transmitter power at the warden, W
  double b = 0.0;         // mean jammer power at the warden, W
  double sigma2_w = 1.0;  // warden noise power, W

  void validate() const;
};

enum class Hypothesis { silent, transmitting };

// a = d_aw^-alpha * gain(theta_w, phi_w) * p_a * sigma2_aw
// b = d_jw^-alpha * sigma2_jw * tr_wj
// (unit-norm transmit beamformer; scalar-diagonal covariances)
DetectionParams effective_powers(double p_a, double tr_wj, const NodeLayout& layout,
                                 const AntennaPattern& pattern,
                                 const ChannelStats& stats, double sigma2_w);

// False-alarm probability of the energy detector at threshold vartheta,
// in the long-observation limit.
double pfa(double vartheta, const DetectionParams& params);

// Missed-detection probability; a == b and degenerate cases are handled by
// their analytic limits.
double pmd(double vartheta, const DetectionParams& params);

// Threshold minimizing pfa + pmd:
//   sigma2_w + (a*b/(a-b))*ln(a/b),  ->  sigma2_w + a  as b -> a.
// Degenerate a*b == 0: returns sigma2_w (no interior minimizer exists).
double optimal_threshold(const DetectionParams& params);

// min over vartheta of pfa + pmd. With r = a/b this is 1 - exp(-ln(r)/(r-1));
// limits: 1 for a = 0 (hypotheses indistinguishable), 0 for b = 0 with a > 0.
double min_error_sum(const DetectionParams& params);

struct RadiometerEstimate {
  double pfa_hat = 0.0;
  double pmd_hat = 0.0;
  double pfa_radius = 0.0;  // 95% Wilson interval half-width
  double pmd_radius = 0.0;
  std::uint64_t trials = 0;
};

// Finite-observation energy detector. Each trial draws fresh channels to the
// warden, forms the mean received power over n symbols as
// (sigma2_w + gamma) * (sum of n unit exponentials)/n, and compares with
// vartheta. Trials use disjoint RNG substreams and run in parallel; counts
// are reduced exactly, so the result is independent of thread count.
RadiometerEstimate simulate_radiometer(std::uint64_t seed, double p_a,
                                       const ComplexVector& w_j, double phi_a,
                                       const NodeLayout& layout,
                                       const AntennaPattern& pattern,
                                       const ChannelStats& stats, double sigma2_w,
                                       std::size_t n_a, std::uint64_t n,
                                       std::uint64_t trials, double vartheta);

}  // namespace covertbeam
