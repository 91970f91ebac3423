#include "covertbeam/beamforming.hpp"

#include <cmath>
#include <stdexcept>

#include "covertbeam/detection.hpp"
#include "covertbeam/rng.hpp"

namespace covertbeam {

ComplexVector mrt_vector(const ComplexVector& h_ab) {
  const double n = norm(h_ab);
  if (!(n > 0.0)) throw std::invalid_argument("mrt_vector: zero channel");
  return scaled(h_ab, 1.0 / n);
}

HermitianMatrix design_jammer_covariance(const ComplexVector& h_jb, double p_j) {
  if (p_j < 0.0) throw std::invalid_argument("jammer power must be >= 0");
  const std::size_t n = h_jb.size();
  if (p_j == 0.0) return HermitianMatrix::zero(n);
  if (n < 2)
    throw std::invalid_argument("design_jammer_covariance: no null space with one antenna");
  const CMat basis = null_space_basis(h_jb);
  CMat w = basis.multiply(basis.adjoint());
  const double scale = p_j / double(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) *= scale;
  return HermitianMatrix(w);
}

ComplexVector gaussian_randomization(const HermitianMatrix& w_cov,
                                     const ComplexVector& h_jb, double p_j,
                                     std::uint64_t seed, int num_candidates,
                                     const RandomizationObjective& objective) {
  if (num_candidates < 1) throw std::invalid_argument("need num_candidates >= 1");
  const std::size_t n = h_jb.size();
  if (p_j == 0.0 || w_cov.trace() <= 0.0) return ComplexVector(n);
  if (n < 2) throw std::invalid_argument("gaussian_randomization: no null space");

  const CMat basis = null_space_basis(h_jb);
  const double col_var = p_j / double(n - 1);

  Rng rng(seed);
  ComplexVector best;
  double best_margin = -1.0;
  const int max_rounds = 8;
  for (int round = 0; round < max_rounds; ++round) {
    for (int c = 0; c < num_candidates; ++c) {
      // CN(0, W_j) = B g with g ~ CN(0, (p_j/(N_j-1)) I)
      ComplexVector g(n - 1);
      for (auto& x : g) x = rng.complex_normal(col_var);
      ComplexVector v = basis.apply(g);
      // project back onto the null space (already there up to rounding)
      v = basis.apply(basis.apply_adjoint(v));
      const double vn = norm(v);
      if (vn < 1e-30) continue;  // degenerate draw
      ComplexVector w = scaled(v, std::sqrt(p_j) / vn);
      DetectionParams params;
      params.a = objective.alice_power_mean;
      params.b = objective.jammer_power_per_unit * norm2(w);
      const double margin = min_error_sum(params);
      if (margin > best_margin) {
        best_margin = margin;
        best = std::move(w);
      }
    }
    if (!best.empty()) return best;
  }
  throw std::runtime_error("gaussian_randomization: all candidates degenerate");
}

}  // namespace covertbeam
