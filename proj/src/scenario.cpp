#include "covertbeam/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace covertbeam {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

void SolverConfig::validate() const {
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (grid_pa < 2 || grid_phi < 2) throw ConfigError("grid resolutions must be >= 2");
  if (randomization_candidates < 1)
    throw ConfigError("randomization_candidates must be >= 1");
}

void ScenarioConfig::validate() const {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw ConfigError("epsilon must lie strictly between 0 and 1");
  if (!(phi_3db_deg > 0.0)) throw ConfigError("phi_3db_deg must be positive");
  if (!(theta_3db_deg > 0.0)) throw ConfigError("theta_3db_deg must be positive");
  if (!(xi_max_db > 0.0)) throw ConfigError("xi_max_db must be positive");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (n_a < 1) throw ConfigError("n_a must be >= 1");
  if (n_j < 1) throw ConfigError("n_j must be >= 1");
  if (p_t < 0.0 || p_t > 1.0) throw ConfigError("p_t must lie in [0, 1]");
  if (p_a_max_w < 0.0) throw ConfigError("p_a_max_w must be >= 0");
  if (p_j_max_w < 0.0) throw ConfigError("p_j_max_w must be >= 0");
  if (realizations < 1) throw ConfigError("realizations must be >= 1");
  if (mc_trials < 1) throw ConfigError("mc_trials must be >= 1");
  try {
    channel_stats.validate();
    layout().validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  solver.validate();
}

double ScenarioConfig::sigma2_b_w() const { return db_to_linear(sigma2_b_dbw); }
double ScenarioConfig::sigma2_w_w() const { return db_to_linear(sigma2_w_dbw); }

NodeLayout ScenarioConfig::layout() const {
  NodeLayout l;
  l.jammer = {jammer_x, jammer_y};
  l.bob = {bob_x, bob_y};
  l.willie = {willie_x, willie_y};
  l.dz_bob = delta_z_m;
  l.dz_willie = delta_z_m;
  l.alpha = alpha;
  return l;
}

AntennaPattern ScenarioConfig::pattern(double phi_a_rad) const {
  AntennaPattern p;
  p.omega_max_db = omega_max_db;
  p.theta_3db = theta_3db_deg * kDegToRad;
  p.phi_3db = phi_3db_deg * kDegToRad;
  p.xi_max_db = xi_max_db;
  p.theta_0 = 0.0;
  p.phi_a = phi_a_rad;
  return p;
}

double ScenarioConfig::initial_tilt() const {
  if (std::isfinite(solver.phi_a0_rad)) return solver.phi_a0_rad;
  return layout().node_angles(NodeId::bob).phi;
}

namespace {

struct KeyParsers {
  std::map<std::string, std::function<void(ScenarioConfig&, double)>> num;
  std::map<std::string, std::function<void(ScenarioConfig&, const std::string&)>> str;
};

const KeyParsers& key_parsers() {
  static const KeyParsers parsers = [] {
    KeyParsers p;
    auto& n = p.num;
    n["epsilon"] = [](ScenarioConfig& c, double v) { c.epsilon = v; };
    n["omega_max_db"] = [](ScenarioConfig& c, double v) { c.omega_max_db = v; };
    n["phi_3db_deg"] = [](ScenarioConfig& c, double v) { c.phi_3db_deg = v; };
    n["theta_3db_deg"] = [](ScenarioConfig& c, double v) { c.theta_3db_deg = v; };
    n["xi_max_db"] = [](ScenarioConfig& c, double v) { c.xi_max_db = v; };
    n["alpha"] = [](ScenarioConfig& c, double v) { c.alpha = v; };
    n["sigma2_b_dbw"] = [](ScenarioConfig& c, double v) { c.sigma2_b_dbw = v; };
    n["sigma2_w_dbw"] = [](ScenarioConfig& c, double v) { c.sigma2_w_dbw = v; };
    n["n_a"] = [](ScenarioConfig& c, double v) { c.n_a = static_cast<std::size_t>(v); };
    n["n_j"] = [](ScenarioConfig& c, double v) { c.n_j = static_cast<std::size_t>(v); };
    n["p_t"] = [](ScenarioConfig& c, double v) { c.p_t = v; };
    n["delta_z_m"] = [](ScenarioConfig& c, double v) { c.delta_z_m = v; };
    n["jammer_x"] = [](ScenarioConfig& c, double v) { c.jammer_x = v; };
    n["jammer_y"] = [](ScenarioConfig& c, double v) { c.jammer_y = v; };
    n["bob_x"] = [](ScenarioConfig& c, double v) { c.bob_x = v; };
    n["bob_y"] = [](ScenarioConfig& c, double v) { c.bob_y = v; };
    n["willie_x"] = [](ScenarioConfig& c, double v) { c.willie_x = v; };
    n["willie_y"] = [](ScenarioConfig& c, double v) { c.willie_y = v; };
    n["p_a_max_w"] = [](ScenarioConfig& c, double v) { c.p_a_max_w = v; };
    n["p_j_max_w"] = [](ScenarioConfig& c, double v) { c.p_j_max_w = v; };
    n["sigma2_h_ab"] = [](ScenarioConfig& c, double v) { c.channel_stats.sigma2_ab = v; };
    n["sigma2_h_aw"] = [](ScenarioConfig& c, double v) { c.channel_stats.sigma2_aw = v; };
    n["sigma2_h_jb"] = [](ScenarioConfig& c, double v) { c.channel_stats.sigma2_jb = v; };
    n["sigma2_h_jw"] = [](ScenarioConfig& c, double v) { c.channel_stats.sigma2_jw = v; };
    n["seed"] = [](ScenarioConfig& c, double v) { c.seed = static_cast<std::uint64_t>(v); };
    n["realizations"] = [](ScenarioConfig& c, double v) { c.realizations = static_cast<int>(v); };
    n["mc_trials"] = [](ScenarioConfig& c, double v) { c.mc_trials = static_cast<std::uint64_t>(v); };
    n["tau"] = [](ScenarioConfig& c, double v) { c.solver.tau = v; };
    n["max_iter"] = [](ScenarioConfig& c, double v) { c.solver.max_iter = static_cast<int>(v); };
    n["phi_a0_deg"] = [](ScenarioConfig& c, double v) { c.solver.phi_a0_rad = v * kDegToRad; };
    n["grid_pa"] = [](ScenarioConfig& c, double v) { c.solver.grid_pa = static_cast<int>(v); };
    n["grid_phi"] = [](ScenarioConfig& c, double v) { c.solver.grid_phi = static_cast<int>(v); };
    n["randomization_candidates"] = [](ScenarioConfig& c, double v) {
      c.solver.randomization_candidates = static_cast<int>(v);
    };
    p.str["covertness_mode"] = [](ScenarioConfig& c, const std::string& v) {
      if (v == "exact")
        c.solver.covertness_mode = CovertnessMode::exact;
      else if (v == "surrogate")
        c.solver.covertness_mode = CovertnessMode::surrogate;
      else
        throw ConfigError("covertness_mode must be 'exact' or 'surrogate'");
    };
    return p;
  }();
  return parsers;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& source_name) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const KeyParsers& parsers = key_parsers();
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    std::string where = source_name + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(where + ": empty key or value");
    if (auto it = parsers.str.find(key); it != parsers.str.end()) {
      try {
        it->second(cfg, value);
      } catch (const ConfigError& e) {
        throw ConfigError(where + ": key '" + key + "': " + e.what());
      }
      continue;
    }
    auto it = parsers.num.find(key);
    if (it == parsers.num.end())
      throw ConfigError(where + ": unknown key '" + key + "'");
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
      throw ConfigError(where + ": key '" + key + "': not a number: '" + value + "'");
    it->second(cfg, v);
  }
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source_name + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace covertbeam
