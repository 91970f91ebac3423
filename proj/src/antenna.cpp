#include "covertbeam/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace covertbeam {

namespace {

constexpr double kLn10 = 2.302585092994045684;

double sq(double x) { return x * x; }

double raw_attenuation_db(double theta, double phi, const AntennaPattern& pat) {
  return 12.0 * sq((theta - pat.theta_0) / pat.theta_3db) +
         12.0 * sq((phi - pat.phi_a) / pat.phi_3db);
}

}  // namespace

void AntennaPattern::validate() const {
  if (!(theta_3db > 0.0)) throw std::invalid_argument("theta_3db must be positive");
  if (!(phi_3db > 0.0)) throw std::invalid_argument("phi_3db must be positive");
  if (!(xi_max_db > 0.0)) throw std::invalid_argument("xi_max_db must be positive");
}

double attenuation_db(double theta, double phi, const AntennaPattern& pat) {
  return std::min(raw_attenuation_db(theta, phi, pat), pat.xi_max_db);
}

bool attenuation_capped(double theta, double phi, const AntennaPattern& pat) {
  return raw_attenuation_db(theta, phi, pat) >= pat.xi_max_db;
}

double attenuation_margin_db(double theta, double phi, const AntennaPattern& pat) {
  return pat.xi_max_db - raw_attenuation_db(theta, phi, pat);
}

double gain_db(double theta, double phi, const AntennaPattern& pat) {
  return pat.omega_max_db - attenuation_db(theta, phi, pat);
}

double gain_linear(double theta, double phi, const AntennaPattern& pat) {
  return std::pow(10.0, gain_db(theta, phi, pat) / 10.0);
}

GainGradient gain_gradient(double theta, double phi, double phi_a_prev,
                           const AntennaPattern& pat) {
  AntennaPattern at_prev = pat;
  at_prev.phi_a = phi_a_prev;
  if (attenuation_capped(theta, phi, at_prev)) return {0.0, true};
  const double xt = (theta - pat.theta_0) / pat.theta_3db;
  const double dphi = phi - phi_a_prev;
  const double value = std::pow(10.0, pat.omega_max_db / 10.0) *
                       std::pow(10.0, -1.2 * sq(dphi / pat.phi_3db)) * 2.4 * kLn10 *
                       dphi / (std::pow(10.0, 1.2 * sq(xt)) * sq(pat.phi_3db));
  return {value, false};
}

double gain_linearized(double theta, double phi, double phi_a, double phi_a_prev,
                       const AntennaPattern& pat) {
  AntennaPattern at_prev = pat;
  at_prev.phi_a = phi_a_prev;
  const GainGradient g = gain_gradient(theta, phi, phi_a_prev, pat);
  return gain_linear(theta, phi, at_prev) + g.value * (phi_a - phi_a_prev);
}

double gain2d_db(double theta, const AntennaPattern& pat) {
  return pat.omega_max_db -
         std::min(12.0 * sq((theta - pat.theta_0) / pat.theta_3db), pat.xi_max_db);
}

double gain2d_linear(double theta, const AntennaPattern& pat) {
  return std::pow(10.0, gain2d_db(theta, pat) / 10.0);
}

}  // namespace covertbeam
