#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"
#include "nbody/sympoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nbody::oracle {

namespace {

constexpr int kMaxEnumeratedParticles = 8;

void require_enumerable(const Configuration& c, const SystemParams& params, const char* what) {
  params.validate();
  if (params.dimension != 1) throw std::invalid_argument(std::string(what) + ": requires dimension 1");
  if (params.n_particles > kMaxEnumeratedParticles) {
    throw std::invalid_argument(std::string(what) + ": N = " + std::to_string(params.n_particles) +
                                " too large for factorial enumeration (max " +
                                std::to_string(kMaxEnumeratedParticles) + ")");
  }
  check_configuration(c, params);
}

void require_quanta(const QuantumNumberSet& q, std::size_t expected, const char* what) {
  if (q.n.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " quantum numbers, got " + std::to_string(q.n.size()));
  }
  for (int v : q.n)
    if (v < 0) throw std::invalid_argument(std::string(what) + ": negative quantum number");
}

}  // namespace

GridSpec default_grid(int n_particles) {
  GridSpec g;
  g.half_width = 8.0;
  g.points_per_axis = n_particles == 2 ? 2000 : 1024;
  return g;
}

double mode_alpha(int i, const SystemParams& params) {
  return std::sqrt(reduced_mass(i, params) * effective_frequency(params) / params.hbar);
}

double single_mode(int n, int i, double xi, const SystemParams& params) {
  if (n < 0) throw std::invalid_argument("single_mode: negative quantum number");
  const double alpha = mode_alpha(i, params);
  const double log_norm =
      0.5 * (std::log(alpha) - n * std::numbers::ln2 - std::lgamma(n + 1.0) - 0.5 * std::log(std::numbers::pi));
  const double y = alpha * xi;
  return std::exp(log_norm - 0.5 * y * y) * hermite(n, y);
}

namespace {

// Same as single_mode in extended precision, for the long permutation sums.
long double wide_mode(int n, int i, long double xi, const SystemParams& params) {
  const long double alpha = mode_alpha(i, params);
  const long double log_norm = 0.5L * (std::log(alpha) - n * std::numbers::ln2_v<long double> -
                                       std::lgamma(n + 1.0L) - 0.5L * std::log(std::numbers::pi_v<long double>));
  const long double y = alpha * xi;
  return std::exp(log_norm - 0.5L * y * y) * hermite(n, y);
}

using WideConfiguration = ConfigurationT<long double>;

}  // namespace

double antisymmetrize_product(const QuantumNumberSet& q, const Configuration& c, Statistics stats,
                              const SystemParams& params) {
  require_enumerable(c, params, "antisymmetrize_product");
  const int n = params.n_particles;
  require_quanta(q, static_cast<std::size_t>(n - 1), "antisymmetrize_product");
  const WideConfiguration wide = c.cast<long double>();
  long double total = 0.0L;
  for (const auto& p : all_permutations(n)) {
    const auto xi = to_jacobi(apply_permutation(p, wide));
    long double term = stats == Statistics::Fermi ? p.sign() : 1.0L;
    for (int i = 1; i < n; ++i) term *= wide_mode(q.n[static_cast<std::size_t>(i - 1)], i, xi(i - 1, 0), params);
    total += term;
  }
  return static_cast<double>(total);
}

double two_step_exchange(const QuantumNumberSet& prefix, int lambda, const Configuration& c,
                         const SystemParams& params) {
  require_enumerable(c, params, "two_step_exchange");
  const int n = params.n_particles;
  require_quanta(prefix, static_cast<std::size_t>(n - 2), "two_step_exchange");
  for (int i = 0; i < n - 2; ++i) {
    if (prefix.n[static_cast<std::size_t>(i)] != i + 1) {
      throw std::invalid_argument("two_step_exchange: prefix must be (1, 2, ..., N-2)");
    }
  }
  if (lambda < 0) throw std::invalid_argument("two_step_exchange: negative lambda");

  const auto inner_perms = all_permutations(n - 1);
  const WideConfiguration wide = c.cast<long double>();
  long double total = 0.0L;
  for (int k = 0; k < n; ++k) {
    // P_kN: exchange particle k with the last one; k = N-1 is the identity.
    const auto outer = Permutation::transposition(n, k, n - 1);
    const WideConfiguration moved = apply_permutation(outer, wide);
    const long double outer_sign = k == n - 1 ? 1.0L : -1.0L;
    // xi_{N-1} is symmetric in the first N-1 particles, so it factors out of
    // the inner sum.
    const long double last = to_jacobi(moved)(n - 2, 0);
    const long double last_mode = wide_mode(lambda, n - 1, last, params);

    long double inner = 0.0L;
    const WideConfiguration head = moved.topRows(n - 1);
    for (const auto& q : inner_perms) {
      const auto xi = to_jacobi(apply_permutation(q, head));
      long double term = q.sign();
      for (int i = 1; i < n - 1; ++i) term *= wide_mode(i, i, xi(i - 1, 0), params);
      inner += term;
    }
    total += outer_sign * inner * last_mode;
  }
  return static_cast<double>(total);
}

}  // namespace nbody::oracle
