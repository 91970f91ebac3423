#include "covertbeam/rng.hpp"

#include <cmath>

namespace covertbeam {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t s = splitmix64(base ^ 0xA0761D6478BD642FULL);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  return s;
}

void Rng::normal_pair(double& z0, double& z1) {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  z0 = r * std::cos(t);
  z1 = r * std::sin(t);
}

cxd Rng::complex_normal(double variance) {
  double z0, z1;
  normal_pair(z0, z1);
  const double s = std::sqrt(0.5 * variance);
  return {s * z0, s * z1};
}

double Rng::exponential() { return -std::log(1.0 - uniform01()); }

double Rng::sum_unit_exponentials(std::uint64_t n) {
  double sum = 0.0;
  std::uint64_t left = n;
  while (left > 0) {
    const std::uint64_t batch = left < 32 ? left : 32;
    double prod = 1.0;
    for (std::uint64_t i = 0; i < batch; ++i) prod *= 1.0 - uniform01();
    sum -= std::log(prod);
    left -= batch;
  }
  return sum;
}

}  // namespace covertbeam
