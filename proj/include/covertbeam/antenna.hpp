#pragma once

namespace covertbeam {

// Dual-attenuation directional antenna: a parabolic attenuation in each of
// the horizontal and vertical planes, each clipped at xi_max_db, and the sum
// clipped again at xi_max_db. The vertical boresight (tilt) phi_a is the
// quantity optimized elsewhere; the horizontal boresight is fixed at 0.
struct AntennaPattern {
  double omega_max_db = 17.0;  // boresight gain, dB
  double theta_3db = 0.0;      // horizontal 3 dB beamwidth, radians
  double phi_3db = 0.0;        // vertical 3 dB beamwidth, radians
  double xi_max_db = 30.0;     // maximum attenuation, dB
  double theta_0 = 0.0;        // horizontal boresight, radians (fixed 0)
  double phi_a = 0.0;          // vertical boresight / tilt, radians

  void validate() const;
};

// Total attenuation in dB: min(12*((theta-theta_0)/theta_3db)^2
//                            + 12*((phi-phi_a)/phi_3db)^2, xi_max_db).
// The per-plane clips collapse into the single outer clip.
double attenuation_db(double theta, double phi, const AntennaPattern& pat);

// True when the attenuation clip is active at (theta, phi); the gain is flat
// in phi_a there.
bool attenuation_capped(double theta, double phi, const AntennaPattern& pat);

// Headroom between the unclipped attenuation and the clip, in dB (negative
// once the clip is active).
double attenuation_margin_db(double theta, double phi, const AntennaPattern& pat);

double gain_db(double theta, double phi, const AntennaPattern& pat);

// 10^(gain_db/10); in the unclipped regime this equals
// 10^(omega_max/10) * 10^(-1.2*[((theta-theta_0)/theta_3db)^2 + ((phi-phi_a)/phi_3db)^2]).
double gain_linear(double theta, double phi, const AntennaPattern& pat);

struct GainGradient {
  double value = 0.0;  // d(gain_linear)/d(phi_a), per radian
  bool capped = false; // clip active at phi_a_prev: gradient is 0 by flatness
};

// Analytic derivative of the linear gain with respect to the tilt,
// evaluated with the tilt at phi_a_prev.
GainGradient gain_gradient(double theta, double phi, double phi_a_prev,
                           const AntennaPattern& pat);

// First-order model of the linear gain in the tilt around phi_a_prev.
double gain_linearized(double theta, double phi, double phi_a, double phi_a_prev,
                       const AntennaPattern& pat);

// Horizontal-only variant (no vertical attenuation, no tilt variable); the
// planar baseline the 3D pattern is compared against.
double gain2d_db(double theta, const AntennaPattern& pat);
double gain2d_linear(double theta, const AntennaPattern& pat);

}  // namespace covertbeam
