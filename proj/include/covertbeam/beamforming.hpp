#pragma once

#include <cstdint>

#include "covertbeam/linalg.hpp"

namespace covertbeam {

// Matched (maximum ratio) transmit beamformer: h / |h|.
ComplexVector mrt_vector(const ComplexVector& h_ab);

// Jammer transmit covariance: power p_j spread uniformly over the orthogonal
// complement of the jammer->receiver channel,
//   W_j = (p_j / (N_j - 1)) * B B^H,  B = null_space_basis(h_jb).
// PSD, trace == p_j, and exactly null on h_jb. p_j == 0 yields the zero
// matrix for any N_j >= 1.
HermitianMatrix design_jammer_covariance(const ComplexVector& h_jb, double p_j);

// Margin evaluation context for rank-one recovery: the selected candidate
// maximizes the exact covertness margin, whose inputs are the transmitter
// power mean at the warden (fixed) and the jammer power mean per unit
// |w_j|^2.
struct RandomizationObjective {
  double alice_power_mean = 0.0;  // a
  double jammer_power_per_unit = 0.0;  // b / |w_j|^2
};

// Rank-one extraction from W_j: draw candidates from CN(0, W_j), project
// onto the null space of h_jb, scale to |w_j|^2 = p_j, and keep the
// candidate with the best covertness margin (ties: first drawn). Under the
// scalar-diagonal covariance model all candidates tie.
ComplexVector gaussian_randomization(const HermitianMatrix& w_cov,
                                     const ComplexVector& h_jb, double p_j,
                                     std::uint64_t seed, int num_candidates,
                                     const RandomizationObjective& objective);

}  // namespace covertbeam
