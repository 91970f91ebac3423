#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "covertbeam/antenna.hpp"
#include "covertbeam/channels.hpp"
#include "covertbeam/geometry.hpp"

namespace covertbeam {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CovertnessMode { exact, surrogate };

// Optimizer knobs.
struct SolverConfig {
  double tau = 1e-6;       // stop when |R(k+1) - R(k)| <= tau, bits/s/Hz
  int max_iter = 50;
  double phi_a0_rad = std::numeric_limits<double>::quiet_NaN();  // NaN: start at Bob's elevation
  int grid_pa = 201;       // exhaustive-search grid, power axis
  int grid_phi = 181;      // exhaustive-search grid, tilt axis over [0, pi/2]
  CovertnessMode covertness_mode = CovertnessMode::exact;
  int randomization_candidates = 16;

  void validate() const;
};

// Full experiment scenario: geometry, antenna, powers, channel statistics,
// and solver settings. Defaults follow the reference evaluation setup.
struct ScenarioConfig {
  double epsilon = 0.1;        // covertness budget
  double omega_max_db = 17.0;
  double phi_3db_deg = 10.0;
  double theta_3db_deg = 70.0;
  double xi_max_db = 30.0;     // attenuation clip; chosen so it stays slack
                               // at the default geometry's converged tilt
  double alpha = 4.0;
  double sigma2_b_dbw = -30.0;
  double sigma2_w_dbw = -30.0;
  std::size_t n_a = 8;
  std::size_t n_j = 8;
  double p_t = 0.5;            // transmit probability per slot
  double delta_z_m = 7.5;
  double jammer_x = 0.0, jammer_y = -10.0;
  double bob_x = 10.0, bob_y = 0.0;
  double willie_x = 8.0, willie_y = 0.0;
  double p_a_max_w = 0.5;
  double p_j_max_w = 0.5;
  ChannelStats channel_stats;
  std::uint64_t seed = 1;
  int realizations = 100;
  std::uint64_t mc_trials = 10000;
  SolverConfig solver;

  void validate() const;

  double sigma2_b_w() const;  // noise powers in watts
  double sigma2_w_w() const;

  NodeLayout layout() const;
  AntennaPattern pattern(double phi_a_rad) const;

  // Initial tilt: configured value, or Bob's elevation angle when unset.
  double initial_tilt() const;
};

// Flat key-value text format: one `key = value` per line, `#` comments.
// Unknown keys are rejected; missing keys keep the defaults above.
ScenarioConfig parse_config(const std::string& text, const std::string& source_name);
ScenarioConfig load_config(const std::string& path);

}  // namespace covertbeam
