#pragma once

#include <cstdint>
#include <random>

#include "covertbeam/linalg.hpp"

namespace covertbeam {

// SplitMix64 mixing step; used for seed derivation and stream splitting.
std::uint64_t splitmix64(std::uint64_t x);

// Derives a child seed from a base seed and up to three stream indices.
// Used everywhere a parallel substream is needed (one per Monte Carlo trial,
// one per sweep point x realization), so results are independent of thread
// count and scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

// Deterministic random source: std::mt19937_64 (output sequence fixed by the
// standard) with explicit, hand-rolled output transforms so draws are
// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal pair via Box-Muller.
  void normal_pair(double& z0, double& z1);

  // Circularly symmetric complex Gaussian with E|z|^2 = variance.
  cxd complex_normal(double variance);

  // Unit-mean exponential.
  double exponential();

  // Sum of n independent unit exponentials. Exponentials are -log(u); logs
  // are taken over short products of uniforms, which is the same sum up to
  // rounding but ~32x fewer log calls.
  double sum_unit_exponentials(std::uint64_t n);

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace covertbeam
