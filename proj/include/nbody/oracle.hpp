#pragma once

// Brute-force checks that do not go through the closed forms: explicit
// permutation sums over products of Jacobi-mode oscillator functions, grid
// diagonalization of the relative Hamiltonian, finite-difference Hamiltonian
// residuals, Monte Carlo normalization and exact identity oracles.

#include "nbody/core.hpp"
#include "nbody/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace nbody::oracle {

/// Oscillator quanta n_1..n_{N-1} of the Jacobi modes.
struct QuantumNumberSet {
  std::vector<int> n;
};

struct GridSpec {
  double half_width = 8.0;  // box [-L, L] per axis, natural relative lengths
  int points_per_axis = 2000;
};

/// 2000 points for N = 2; 1024 per axis for N = 3.
GridSpec default_grid(int n_particles);

/// phi_n(xi) of the i-th Jacobi mode: N_{n,i} exp(-alpha_i^2 xi^2 / 2) H_n(alpha_i xi),
/// alpha_i = sqrt(mu_i omega' / hbar).
double single_mode(int n, int i, double xi, const SystemParams& params);

/// sqrt(mu_i omega' / hbar).
double mode_alpha(int i, const SystemParams& params);

/// sum_P a(P) prod_i phi_{n_i}(xi_i(P c)): the N!-term (anti)symmetrization.
/// One dimension, N <= 8.
double antisymmetrize_product(const QuantumNumberSet& q, const Configuration& c, Statistics stats,
                              const SystemParams& params);

/// The same Fermi sum organized as an outer N-term sum over exchanges of the
/// last particle with particle k and an inner (N-1)!-term antisymmetrization
/// of the first N-1 particles carrying modes 1..N-2.
/// prefix.n must be (1, 2, ..., N-2).
double two_step_exchange(const QuantumNumberSet& prefix, int lambda, const Configuration& c,
                         const SystemParams& params);

/// Lowest n_levels energies (units of hbar omega) of the requested exchange
/// sector of the relative Hamiltonian, by finite differences. N in {2, 3}, D = 1.
/// Throws std::runtime_error if halving the grid spacing moves the levels
/// by more than 1%.
std::vector<double> grid_diagonalize(const SystemParams& params, Statistics stats,
                                     const GridSpec& grid, int n_levels);

class NodeProximityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LogWavefunction = std::function<LogAmplitude(const Configuration&)>;

/// (H psi)(c) / psi(c) with the Laplacian from central differences at steps h
/// and h/2, Richardson-combined. Physical energy units.
/// Throws NodeProximityError when |psi(c)| < 1e-8 of the largest stencil value.
double local_energy(const LogWavefunction& psi, const Configuration& c, const SystemParams& params,
                    double h);

/// |local_energy - energy| / |energy|; energy in physical units.
double hamiltonian_residual(const LogWavefunction& psi, double energy, const Configuration& c,
                            const SystemParams& params, double h);

struct ResidualSummary {
  double max_residual = 0.0;
  int points = 0;
  int resampled = 0;
};

/// Residual at `points` Gaussian-sampled configurations, resampling points
/// that sit on a node. h defaults to 1e-2 of the relative length scale.
ResidualSummary sample_residuals(const LogWavefunction& psi, double energy,
                                 const SystemParams& params, int points, std::uint64_t seed,
                                 double h = 0.0);

/// Configuration with Jacobi modes drawn from the Gaussian |G|^2 (so
/// xi_i ~ N(0, 1/(2 alpha_i^2)) per axis) and a unit-variance centroid.
Configuration sample_configuration(const SystemParams& params, std::mt19937_64& rng);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Importance-sampled integral of |psi|^2 over the relative coordinates
/// xi_1..xi_{N-1} (every axis). The proposal is the squared pair Gaussian
/// with every variance multiplied by `widening`; widening = 1 is |G|^2
/// itself, whose polynomial weights have heavy tails for excited states.
/// psi must be (polynomial) x (pair Gaussian). Samples are drawn in
/// fixed-size blocks, each with its own stream derived from (seed, block), so
/// the result does not depend on the thread count.
MonteCarloEstimate mc_normalize(const LogWavefunction& psi, const SystemParams& params,
                                std::size_t samples, std::uint64_t seed, double widening = 2.0);

// -- Exact identity oracles ---------------------------------------------------------

/// sigma_i by enumerating all i-subsets.
Rational elementary_symmetric_bruteforce(int i, std::span<const Rational> x);

/// h_i: sum of all degree-i monomials with repetition, by enumeration.
Rational complete_homogeneous_bruteforce(int i, std::span<const Rational> x);

/// Laplace expansion along the first row.
Rational cofactor_determinant(const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& m);

/// Explicit matrix with rows x^0..x^{N-2}, x^gamma; cofactor determinant.
Rational hyper_vandermonde_matrix(std::span<const Rational> x, int gamma);

/// sum_k a(P_kN) P_kN [prod_{i>j}^{N-1} (x_i - x_j) x_N^gamma].
Rational hyper_vandermonde_exchange_sum(std::span<const Rational> x, int gamma);

/// sum_k a(P_kN) P_kN [prod_{i>j}^{N-1} (x_i - x_j) xi_{N-1}^l], with xi_{N-1}
/// taken from the Jacobi transform of the exchanged coordinates.
Rational antisym_power_direct(std::span<const Rational> x, int l);

}  // namespace nbody::oracle
