#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "covertbeam/beamforming.hpp"
#include "covertbeam/channels.hpp"
#include "covertbeam/rng.hpp"

using namespace covertbeam;

TEST_CASE("matched beamformer aligns with the channel") {
  const ComplexVector h{cxd{3.0, 0.0}, cxd{0.0, 4.0}};
  const ComplexVector w = mrt_vector(h);
  CHECK(norm(w) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dot(w, h).real() == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(std::abs(dot(w, h).imag()) <= 1e-14);
}

TEST_CASE("matched beamformer beats random unit competitors") {
  ChannelStats stats;
  const ChannelSet set = sample_channels(17, 8, 2, stats);
  const ComplexVector w = mrt_vector(set.h_ab);
  const double best = std::abs(dot(w, set.h_ab));
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    ComplexVector u(8);
    for (auto& x : u) x = rng.complex_normal(1.0);
    const double un = norm(u);
    CHECK(std::abs(dot(u, set.h_ab)) / un <= best + 1e-12);
  }
}

TEST_CASE("matched beamformer with one antenna is a pure phase") {
  const ComplexVector w = mrt_vector({cxd{3.0, -4.0}});
  CHECK(std::abs(w[0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(mrt_vector({cxd{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("zero jammer power yields the zero covariance") {
  const HermitianMatrix w = design_jammer_covariance({cxd{1.0, 0.0}, cxd{2.0, 0.0}}, 0.0);
  CHECK(w.trace() == 0.0);
  CHECK(w.dim() == 2);
}

TEST_CASE("axis-aligned covariance fills the free axis") {
  const HermitianMatrix w =
      design_jammer_covariance({cxd{1.0, 0.0}, cxd{0.0, 0.0}}, 0.5);
  CHECK(std::abs(w.at(0, 0)) <= 1e-14);
  CHECK(w.at(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(w.at(0, 1)) <= 1e-14);
}

TEST_CASE("uniform covariance: scaled projector with full trace and exact null") {
  ChannelStats stats;
  const ChannelSet set = sample_channels(23, 2, 8, stats);
  const double p_j = 0.8;
  const HermitianMatrix w = design_jammer_covariance(set.h_jb, p_j);
  CHECK(w.trace() == doctest::Approx(p_j).epsilon(1e-12));
  CHECK(w.is_psd());
  // W^2 = (p_j/7) W  <=>  eigenvalues are p_j/7 (x7) and 0
  const CMat w2 = w.mat().multiply(w.mat());
  CMat scaled_w = w.mat();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) scaled_w.at(i, j) *= p_j / 7.0;
  CHECK(w2.max_abs_diff(scaled_w) <= 1e-12);
  // jamming invisible at the protected receiver
  CHECK(w.quad_form(set.h_jb) <= 1e-12 * w.trace() * norm2(set.h_jb));
}

TEST_CASE("single-antenna jammer with positive power has no null space") {
  CHECK_THROWS_AS(design_jammer_covariance({cxd{1.0, 0.0}}, 0.5), std::invalid_argument);
}

TEST_CASE("rank-one recovery with a one-dimensional null space is forced") {
  const ComplexVector h{cxd{1.0, 0.0}, cxd{0.0, 0.0}};
  const HermitianMatrix cov = design_jammer_covariance(h, 0.5);
  RandomizationObjective obj;
  obj.alice_power_mean = 1e-6;
  obj.jammer_power_per_unit = 1.0;
  const ComplexVector w = gaussian_randomization(cov, h, 0.5, 7, 1, obj);
  CHECK(std::abs(w[0]) <= 1e-12);
  CHECK(std::abs(w[1]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("recovered beamformers satisfy power and null constraints") {
  ChannelStats stats;
  RandomizationObjective obj;
  obj.alice_power_mean = 1e-6;
  obj.jammer_power_per_unit = 2.0;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const ChannelSet set = sample_channels(seed, 2, 8, stats);
    const HermitianMatrix cov = design_jammer_covariance(set.h_jb, 0.7);
    const ComplexVector w = gaussian_randomization(cov, set.h_jb, 0.7, seed, 8, obj);
    CHECK(norm2(w) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(std::norm(dot(w, set.h_jb)) <= 1e-10 * norm2(w) * norm2(set.h_jb));
  }
}

TEST_CASE("under scalar-diagonal statistics all candidates mask equally") {
  // the masking power depends on w_j only through |w_j|^2, which is pinned
  ChannelStats stats;
  const ChannelSet set = sample_channels(41, 2, 8, stats);
  const HermitianMatrix cov = design_jammer_covariance(set.h_jb, 0.5);
  RandomizationObjective obj;
  obj.alice_power_mean = 1e-6;
  obj.jammer_power_per_unit = 3.0;
  double first_b = -1.0;
  for (int c = 1; c <= 16; c *= 4) {
    const ComplexVector w = gaussian_randomization(cov, set.h_jb, 0.5, 13, c, obj);
    const double b = obj.jammer_power_per_unit * norm2(w);
    if (first_b < 0.0)
      first_b = b;
    else
      CHECK(b == doctest::Approx(first_b).epsilon(1e-12));
  }
}
