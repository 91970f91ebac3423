#include "covertbeam/detection.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "covertbeam/rng.hpp"

namespace covertbeam {

namespace {

// ln(r)/(r-1), continuous through r = 1.
double log_over_rm1(double r) {
  const double u = r - 1.0;
  if (std::abs(u) < 1e-8) return 1.0 - u / 2.0 + u * u / 3.0;
  return std::log1p(u) / u;
}

double wilson_radius(double p_hat, double n) {
  const double z = 1.959963984540054;  // 95%
  const double z2 = z * z;
  return z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

}  // namespace

void DetectionParams::validate() const {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("effective powers must be >= 0");
  if (!(sigma2_w > 0.0)) throw std::invalid_argument("sigma2_w must be positive");
}

DetectionParams effective_powers(double p_a, double tr_wj, const NodeLayout& layout,
                                 const AntennaPattern& pattern,
                                 const ChannelStats& stats, double sigma2_w) {
  if (p_a < 0.0 || tr_wj < 0.0) throw std::invalid_argument("powers must be >= 0");
  const NodeAngles w = layout.node_angles(NodeId::willie);
  DetectionParams params;
  params.a = layout.path_loss_from_alice(NodeId::willie) *
             gain_linear(w.theta, w.phi, pattern) * p_a * stats.sigma2_aw;
  params.b = layout.path_loss_from_jammer(NodeId::willie) * stats.sigma2_jw * tr_wj;
  params.sigma2_w = sigma2_w;
  return params;
}

double pfa(double vartheta, const DetectionParams& params) {
  const double x = vartheta - params.sigma2_w;
  if (x <= 0.0) return 1.0;
  if (params.b <= 0.0) return 0.0;
  return std::exp(-x / params.b);
}

double pmd(double vartheta, const DetectionParams& params) {
  const double x = vartheta - params.sigma2_w;
  if (x <= 0.0) return 0.0;
  const double a = params.a;
  const double b = params.b;
  if (a <= 0.0 && b <= 0.0) return 1.0;          // both hypotheses pure noise
  if (a <= 0.0) return 1.0 - std::exp(-x / b);   // jammer-only excess
  if (b <= 0.0) return 1.0 - std::exp(-x / a);
  if (std::abs(a - b) <= 1e-10 * std::max(a, b))
    return 1.0 - std::exp(-x / a) * (1.0 + x / a);  // Erlang limit
  return 1.0 + (b * std::exp(-x / b) - a * std::exp(-x / a)) / (a - b);
}

double optimal_threshold(const DetectionParams& params) {
  const double a = params.a;
  const double b = params.b;
  if (a <= 0.0 || b <= 0.0) return params.sigma2_w;  // degenerate, no interior min
  const double r = a / b;
  // a*b/(a-b)*ln(a/b) == b * r * ln(r)/(r-1)
  return params.sigma2_w + b * r * log_over_rm1(r);
}

double min_error_sum(const DetectionParams& params) {
  const double a = params.a;
  const double b = params.b;
  if (a <= 0.0) return 1.0;
  if (b <= 0.0) return 0.0;
  const double r = a / b;
  return 1.0 - std::exp(-log_over_rm1(r));
}

RadiometerEstimate simulate_radiometer(std::uint64_t seed, double p_a,
                                       const ComplexVector& w_j, double phi_a,
                                       const NodeLayout& layout,
                                       const AntennaPattern& pattern,
                                       const ChannelStats& stats, double sigma2_w,
                                       std::size_t n_a, std::uint64_t n,
                                       std::uint64_t trials, double vartheta) {
  if (n < 1 || trials < 1) throw std::invalid_argument("need n >= 1 and trials >= 1");
  AntennaPattern pat = pattern;
  pat.phi_a = phi_a;
  const NodeAngles wang = layout.node_angles(NodeId::willie);
  const double gain_w = gain_linear(wang.theta, wang.phi, pat);
  const double pl_aw = layout.path_loss_from_alice(NodeId::willie);
  const double pl_jw = layout.path_loss_from_jammer(NodeId::willie);
  const std::size_t n_j = w_j.size();

  auto run_trial = [&](std::uint64_t trial, std::uint64_t& fa, std::uint64_t& md) {
    Rng rng(derive_seed(seed, trial));
    ComplexVector h_ab(n_a), h_aw(n_a), h_jw(n_j);
    for (auto& h : h_ab) h = rng.complex_normal(stats.sigma2_ab);
    for (auto& h : h_aw) h = rng.complex_normal(stats.sigma2_aw);
    for (auto& h : h_jw) h = rng.complex_normal(stats.sigma2_jw);

    const double jam = n_j > 0 ? pl_jw * std::norm(dot(w_j, h_jw)) : 0.0;
    const double hn = norm(h_ab);
    const double proj = hn > 0.0 ? std::norm(dot(h_ab, h_aw)) / (hn * hn) : 0.0;
    const double gamma0 = jam;
    const double gamma1 = pl_aw * gain_w * p_a * proj + jam;

    const double r0 = (sigma2_w + gamma0) * rng.sum_unit_exponentials(n) / double(n);
    const double r1 = (sigma2_w + gamma1) * rng.sum_unit_exponentials(n) / double(n);
    if (r0 > vartheta) ++fa;
    if (r1 < vartheta) ++md;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t n_chunks = std::min<std::uint64_t>(trials, hw * 4ull);
  std::vector<std::uint64_t> fa_counts(n_chunks, 0), md_counts(n_chunks, 0);
  std::vector<std::thread> workers;
  std::size_t threads = std::min<std::uint64_t>(hw, n_chunks);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t]() {
      for (std::uint64_t c = t; c < n_chunks; c += threads) {
        const std::uint64_t begin = trials * c / n_chunks;
        const std::uint64_t end = trials * (c + 1) / n_chunks;
        for (std::uint64_t i = begin; i < end; ++i)
          run_trial(i, fa_counts[c], md_counts[c]);
      }
    });
  }
  for (auto& w : workers) w.join();

  std::uint64_t fa = 0, md = 0;
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    fa += fa_counts[c];
    md += md_counts[c];
  }

  RadiometerEstimate est;
  est.trials = trials;
  est.pfa_hat = double(fa) / double(trials);
  est.pmd_hat = double(md) / double(trials);
  est.pfa_radius = wilson_radius(est.pfa_hat, double(trials));
  est.pmd_radius = wilson_radius(est.pmd_hat, double(trials));
  return est;
}

}  // namespace covertbeam
