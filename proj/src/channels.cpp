#include "covertbeam/channels.hpp"

#include <stdexcept>

#include "covertbeam/rng.hpp"

namespace covertbeam {

void ChannelStats::validate() const {
  if (!(sigma2_ab > 0.0) || !(sigma2_aw > 0.0) || !(sigma2_jb > 0.0) ||
      !(sigma2_jw > 0.0))
    throw std::invalid_argument("channel variances must be positive");
}

ChannelSet sample_channels(std::uint64_t seed, std::size_t n_a, std::size_t n_j,
                           const ChannelStats& stats) {
  if (n_a < 1 || n_j < 1) throw std::invalid_argument("need at least one antenna");
  stats.validate();
  Rng rng(seed);
  auto draw = [&rng](std::size_t n, double variance) {
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.complex_normal(variance);
    return v;
  };
  ChannelSet set;
  set.h_ab = draw(n_a, stats.sigma2_ab);
  set.h_aw = draw(n_a, stats.sigma2_aw);
  set.h_jb = draw(n_j, stats.sigma2_jb);
  set.h_jw = draw(n_j, stats.sigma2_jw);
  set.stats = stats;
  return set;
}

}  // namespace covertbeam
