#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbody::oracle {

namespace {

constexpr double kNodeFloor = 1e-8;
constexpr int kMaxAttemptsPerPoint = 1000;

}  // namespace

double local_energy(const LogWavefunction& psi, const Configuration& c, const SystemParams& params,
                    double h) {
  params.validate();
  check_configuration(c, params);
  if (!(h > 0.0)) throw std::invalid_argument("local_energy: step must be > 0");

  const LogAmplitude center = psi(c);
  if (center.sign == 0) throw NodeProximityError("local_energy: configuration sits on a node");

  // psi(c + s e) / psi(c), together with the largest stencil magnitude seen.
  double max_log = center.log_abs;
  auto ratio = [&](Eigen::Index i, Eigen::Index a, double s) {
    Configuration moved = c;
    moved(i, a) += s;
    const LogAmplitude v = psi(moved);
    if (v.sign == 0) return 0.0;
    max_log = std::max(max_log, v.log_abs);
    return static_cast<double>(v.sign * center.sign) * std::exp(v.log_abs - center.log_abs);
  };

  double laplacian = 0.0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index a = 0; a < c.cols(); ++a) {
      const double coarse = (ratio(i, a, h) + ratio(i, a, -h) - 2.0) / (h * h);
      const double hh = 0.5 * h;
      const double fine = (ratio(i, a, hh) + ratio(i, a, -hh) - 2.0) / (hh * hh);
      laplacian += (4.0 * fine - coarse) / 3.0;
    }
  if (center.log_abs - max_log < std::log(kNodeFloor)) {
    throw NodeProximityError("local_energy: |psi| below the node floor");
  }

  double potential = 0.0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = i + 1; j < c.rows(); ++j) potential += (c.row(i) - c.row(j)).squaredNorm();
  potential *= 0.5 * params.mass * params.omega * params.omega;

  return -params.hbar * params.hbar / (2.0 * params.mass) * laplacian + potential;
}

double hamiltonian_residual(const LogWavefunction& psi, double energy, const Configuration& c,
                            const SystemParams& params, double h) {
  if (energy == 0.0) throw std::invalid_argument("hamiltonian_residual: energy must be non-zero");
  return std::abs(local_energy(psi, c, params, h) - energy) / std::abs(energy);
}

Configuration sample_configuration(const SystemParams& params, std::mt19937_64& rng) {
  params.validate();
  std::normal_distribution<double> normal(0.0, 1.0);
  Configuration xi(params.n_particles, params.dimension);
  for (int i = 1; i < params.n_particles; ++i) {
    const double sd = 1.0 / (std::sqrt(2.0) * mode_alpha(i, params));
    for (int a = 0; a < params.dimension; ++a) xi(i - 1, a) = sd * normal(rng);
  }
  for (int a = 0; a < params.dimension; ++a) xi(params.n_particles - 1, a) = normal(rng);
  return from_jacobi(xi);
}

ResidualSummary sample_residuals(const LogWavefunction& psi, double energy, const SystemParams& params,
                                 int points, std::uint64_t seed, double h) {
  params.validate();
  if (points < 0) throw std::invalid_argument("sample_residuals: negative point count");
  if (h <= 0.0) h = 1e-2 * relative_length_scale(params);

  std::vector<double> residual(static_cast<std::size_t>(points), 0.0);
  std::vector<int> retries(static_cast<std::size_t>(points), 0);
  parallel_for(static_cast<std::size_t>(points), [&](std::size_t p) {
    for (int attempt = 0; attempt < kMaxAttemptsPerPoint; ++attempt) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      const Configuration c = sample_configuration(params, rng);
      try {
        residual[p] = hamiltonian_residual(psi, energy, c, params, h);
        return;
      } catch (const NodeProximityError&) {
        ++retries[p];
      }
    }
    throw std::runtime_error("sample_residuals: could not find a point away from the nodes");
  });

  ResidualSummary s;
  s.points = points;
  for (std::size_t p = 0; p < residual.size(); ++p) {
    s.max_residual = std::max(s.max_residual, residual[p]);
    s.resampled += retries[p];
  }
  return s;
}

}  // namespace nbody::oracle
