#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nbody::oracle {

namespace {

constexpr std::size_t kBlockSize = 4096;

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;
};

}  // namespace

MonteCarloEstimate mc_normalize(const LogWavefunction& psi, const SystemParams& params,
                                std::size_t samples, std::uint64_t seed, double widening) {
  params.validate();
  if (samples == 0) throw std::invalid_argument("mc_normalize: need at least one sample");
  if (!(widening >= 1.0)) throw std::invalid_argument("mc_normalize: widening must be >= 1");
  const int n = params.n_particles;
  const int dim = params.dimension;

  // Proposal: independent normals xi_i ~ N(0, widening / (2 alpha_i^2)) per axis.
  double log_norm = 0.0;
  std::vector<double> sd(static_cast<std::size_t>(n - 1));
  std::vector<double> curvature(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    const double alpha = mode_alpha(i, params);
    log_norm += 0.5 * dim * std::log(std::numbers::pi * widening / (alpha * alpha));
    sd[static_cast<std::size_t>(i - 1)] = std::sqrt(widening / 2.0) / alpha;
    curvature[static_cast<std::size_t>(i - 1)] = alpha * alpha / widening;
  }

  const std::size_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> sums(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t first = b * kBlockSize;
    const std::size_t count = std::min(kBlockSize, samples - first);
    JacobiCoordinates xi = JacobiCoordinates::Zero(n, dim);
    BlockSums s;
    for (std::size_t k = 0; k < count; ++k) {
      for (int i = 1; i < n; ++i)
        for (int a = 0; a < dim; ++a) xi(i - 1, a) = sd[static_cast<std::size_t>(i - 1)] * normal(rng);
      double log_q = -log_norm;
      for (int i = 1; i < n; ++i)
        log_q -= curvature[static_cast<std::size_t>(i - 1)] * xi.row(i - 1).squaredNorm();
      const LogAmplitude v = psi(from_jacobi(xi));
      const double w = v.sign == 0 ? 0.0 : std::exp(2.0 * v.log_abs - log_q);
      s.sum += w;
      s.sum_sq += w * w;
    }
    s.count = count;
    sums[b] = s;
  });

  double total = 0.0;
  double total_sq = 0.0;
  for (const auto& s : sums) {
    total += s.sum;
    total_sq += s.sum_sq;
  }
  const double m = static_cast<double>(samples);
  const double mean = total / m;
  const double var = std::max(0.0, total_sq / m - mean * mean);
  MonteCarloEstimate est;
  est.value = mean;
  est.std_error = std::sqrt(var / m);
  est.samples = samples;
  return est;
}

}  // namespace nbody::oracle
