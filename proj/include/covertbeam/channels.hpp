#pragma once

#include <cstdint>

#include "covertbeam/linalg.hpp"

namespace covertbeam {

// Per-entry variances of the four channel vectors (scalar-diagonal
// covariance model: C = sigma^2 I).
struct ChannelStats {
  double sigma2_ab = 1.0;
  double sigma2_aw = 1.0;
  double sigma2_jb = 1.0;
  double sigma2_jw = 1.0;

  void validate() const;
};

// One realization of the four channel vectors.
struct ChannelSet {
  ComplexVector h_ab;  // Alice -> Bob,    length N_a
  ComplexVector h_aw;  // Alice -> Willie, length N_a
  ComplexVector h_jb;  // jammer -> Bob,   length N_j
  ComplexVector h_jw;  // jammer -> Willie, length N_j
  ChannelStats stats;
};

// I.i.d. circularly symmetric complex Gaussian entries, deterministic given
// the seed (fixed draw order: h_ab, h_aw, h_jb, h_jw).
ChannelSet sample_channels(std::uint64_t seed, std::size_t n_a, std::size_t n_j,
                           const ChannelStats& stats);

}  // namespace covertbeam
