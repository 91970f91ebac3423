#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "covertbeam/antenna.hpp"
#include "covertbeam/geometry.hpp"

using namespace covertbeam;

namespace {

constexpr double kDeg = M_PI / 180.0;

AntennaPattern reference_pattern(double phi_a = 0.0) {
  AntennaPattern p;
  p.omega_max_db = 17.0;
  p.theta_3db = 70.0 * kDeg;
  p.phi_3db = 10.0 * kDeg;
  p.xi_max_db = 30.0;
  p.phi_a = phi_a;
  return p;
}

// Independent five-point central difference of gain_linear w.r.t. the tilt.
double gradient_fd(double theta, double phi, double phi_a, const AntennaPattern& base,
                   double h = 1e-5) {
  auto f = [&](double tilt) {
    AntennaPattern p = base;
    p.phi_a = tilt;
    return gain_linear(theta, phi, p);
  };
  return (f(phi_a - 2 * h) - 8 * f(phi_a - h) + 8 * f(phi_a + h) - f(phi_a + 2 * h)) /
         (12 * h);
}

}  // namespace

TEST_CASE("angles of a node on the x axis") {
  NodeLayout layout;
  layout.bob = {10.0, 0.0};
  layout.dz_bob = 7.5;
  const NodeAngles a = layout.node_angles(NodeId::bob);
  CHECK(a.theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(a.phi == doctest::Approx(std::atan(0.75)).epsilon(1e-15));
  CHECK(a.phi == doctest::Approx(0.6435011087932844).epsilon(1e-12));
}

TEST_CASE("angles of a node on the y axis with zero height difference") {
  NodeLayout layout;
  layout.willie = {0.0, 5.0};
  layout.dz_willie = 0.0;
  const NodeAngles a = layout.node_angles(NodeId::willie);
  CHECK(a.theta == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(a.phi == 0.0);
}

TEST_CASE("node coincident with the transmitter is rejected") {
  NodeLayout layout;
  layout.willie = {0.0, 0.0};
  CHECK_THROWS_AS(layout.node_angles(NodeId::willie), DegenerateGeometryError);
  CHECK_THROWS_AS(layout.validate(), DegenerateGeometryError);
}

TEST_CASE("path loss uses planar distances") {
  NodeLayout layout;  // bob at (10,0), jammer at (0,-10)
  CHECK(layout.distance_from_alice(NodeId::bob) == doctest::Approx(10.0));
  CHECK(layout.distance_from_jammer(NodeId::bob) == doctest::Approx(std::sqrt(200.0)));
  CHECK(layout.path_loss_from_alice(NodeId::bob) == doctest::Approx(1e-4).epsilon(1e-12));
}

TEST_CASE("gain at boresight is the maximum gain") {
  const AntennaPattern p = reference_pattern(0.3);
  CHECK(gain_db(0.0, 0.3, p) == doctest::Approx(17.0).epsilon(1e-15));
  CHECK(gain_linear(0.0, 0.3, p) == doctest::Approx(50.11872336272722).epsilon(1e-14));
}

TEST_CASE("one vertical beamwidth of offset costs 12 dB") {
  const AntennaPattern p = reference_pattern(0.0);
  CHECK(gain_db(0.0, p.phi_3db, p) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("horizontal offset with unit normalized angle costs 12 dB in linear scale") {
  const AntennaPattern p = reference_pattern(0.0);
  const double g = gain_linear(p.theta_3db, 0.0, p);
  CHECK(g == doctest::Approx(50.11872336272722 * std::pow(10.0, -1.2)).epsilon(1e-12));
  CHECK(gain_linear(0.0, 0.0, p) / g ==
        doctest::Approx(std::pow(10.0, 1.2)).epsilon(1e-12));
}

TEST_CASE("attenuation saturates at the maximum attenuation") {
  const AntennaPattern p = reference_pattern(0.0);
  CHECK(gain_db(2.0, 1.5, p) == doctest::Approx(17.0 - 30.0).epsilon(1e-15));
  CHECK(gain_db(0.0, 1.5, p) == doctest::Approx(-13.0).epsilon(1e-15));
}

TEST_CASE("gain_db stays within [max - cap, max] on a dense angle grid") {
  const AntennaPattern p = reference_pattern(0.4);
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200; ++j) {
      const double theta = -M_PI + 2 * M_PI * i / 200;
      const double phi = -M_PI / 2 + M_PI * j / 200;
      const double g = gain_db(theta, phi, p);
      CHECK(g <= 17.0 + 1e-12);
      CHECK(g >= 17.0 - 30.0 - 1e-12);
    }
}

TEST_CASE("dB and linear scales agree at random angles") {
  const AntennaPattern p = reference_pattern(0.2);
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> ang(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    const double theta = ang(gen);
    const double phi = ang(gen);
    const double lin = gain_linear(theta, phi, p);
    const double db = gain_db(theta, phi, p);
    CHECK(lin == doctest::Approx(std::pow(10.0, db / 10.0)).epsilon(1e-12));
  }
}

TEST_CASE("gain over a tilt grid peaks where the tilt matches the node elevation") {
  AntennaPattern p = reference_pattern();
  const double phi_node = 0.37;
  double best_gain = -1e300, best_tilt = 0.0;
  for (int i = 0; i <= 400; ++i) {
    p.phi_a = 0.37 * i / 200.0;  // grid contains phi_node exactly at i = 200
    const double g = gain_db(0.0, phi_node, p);
    if (g > best_gain) {
      best_gain = g;
      best_tilt = p.phi_a;
    }
  }
  CHECK(best_tilt == doctest::Approx(phi_node).epsilon(1e-12));
  CHECK(best_gain == doctest::Approx(17.0).epsilon(1e-12));
}

TEST_CASE("tilt gradient vanishes when the node sits on the vertical boresight") {
  const AntennaPattern p = reference_pattern();
  const GainGradient g = gain_gradient(0.1, 0.25, 0.25, p);
  CHECK(!g.capped);
  CHECK(g.value == 0.0);
}

TEST_CASE("tilt gradient matches central finite differences at random uncapped points") {
  const AntennaPattern p = reference_pattern();
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> elev(0.0, 0.6);
  std::uniform_real_distribution<double> az(-0.5, 0.5);
  int checked = 0;
  while (checked < 1000) {
    const double theta = az(gen);
    const double phi = elev(gen);
    const double tilt = elev(gen);
    AntennaPattern q = p;
    q.phi_a = tilt;
    // keep a margin from the cap so the finite-difference stencil stays smooth
    if (attenuation_db(theta, phi, q) > p.xi_max_db - 1.0) continue;
    const GainGradient g = gain_gradient(theta, phi, tilt, p);
    REQUIRE(!g.capped);
    const double fd = gradient_fd(theta, phi, tilt, p);
    const double scale = std::max({std::abs(fd), std::abs(g.value), 1e-9});
    CHECK(std::abs(g.value - fd) / scale <= 1e-6);
    ++checked;
  }
}

TEST_CASE("tilt gradient points toward the node elevation in the uncapped regime") {
  const AntennaPattern p = reference_pattern();
  for (double tilt : {0.05, 0.2, 0.35}) {
    for (double phi : {0.1, 0.3, 0.42}) {
      if (phi == tilt) continue;
      const GainGradient g = gain_gradient(0.0, phi, tilt, p);
      if (g.capped) continue;
      CHECK(std::signbit(g.value) == std::signbit(phi - tilt));
    }
  }
}

TEST_CASE("tilt gradient is flagged in the capped regime") {
  const AntennaPattern p = reference_pattern();
  const GainGradient g = gain_gradient(0.0, 1.4, 0.0, p);
  CHECK(g.capped);
  CHECK(g.value == 0.0);
}

TEST_CASE("linearized gain anchors exactly at the expansion point") {
  const AntennaPattern p = reference_pattern();
  AntennaPattern at = p;
  at.phi_a = 0.3;
  CHECK(gain_linearized(0.1, 0.4, 0.3, 0.3, p) ==
        doctest::Approx(gain_linear(0.1, 0.4, at)).epsilon(1e-15));
}

TEST_CASE("linearized gain error is second order in the step") {
  const AntennaPattern p = reference_pattern();
  const double theta = 0.1, phi = 0.42, tilt = 0.3;
  auto err = [&](double step) {
    AntennaPattern at = p;
    at.phi_a = tilt + step;
    return std::abs(gain_linearized(theta, phi, tilt + step, tilt, p) -
                    gain_linear(theta, phi, at));
  };
  const double e1 = err(0.02);
  const double e2 = err(0.01);
  const double e4 = err(0.005);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(e2 / e4 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("linearized gain is constant in the tilt when anchored on the node") {
  const AntennaPattern p = reference_pattern();
  const double base = gain_linearized(0.0, 0.3, 0.3, 0.3, p);
  CHECK(gain_linearized(0.0, 0.3, 0.25, 0.3, p) == doctest::Approx(base).epsilon(1e-15));
  CHECK(gain_linearized(0.0, 0.3, 0.35, 0.3, p) == doctest::Approx(base).epsilon(1e-15));
}

TEST_CASE("planar gain ignores elevation") {
  const AntennaPattern p = reference_pattern(0.5);
  CHECK(gain2d_db(0.0, p) == doctest::Approx(17.0).epsilon(1e-15));
  CHECK(gain2d_db(p.theta_3db, p) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(gain2d_linear(0.0, p) == doctest::Approx(50.11872336272722).epsilon(1e-14));
}

TEST_CASE("invalid pattern parameters are rejected") {
  AntennaPattern p = reference_pattern();
  p.phi_3db = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_pattern();
  p.xi_max_db = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
