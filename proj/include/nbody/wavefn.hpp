#pragma once

// Closed-form eigenfunctions of the harmonic pair-interaction Hamiltonian.
//
// Every state is (prefactor) x (polynomial) x exp(-(m omega / (2 sqrt(N) hbar))
// sum_{i<j} |r_i - r_j|^2), the Gaussian taken over all N(N-1)/2 pairs.
// Fermi states in one dimension carry the antisymmetric factor
// prod_{i<j} (x_i - x_j). Each evaluator has a log-domain variant returning
// (log|psi|, sign) for large N, where the direct value under/overflows.

#include "nbody/core.hpp"
#include "nbody/sympoly.hpp"

#include <span>
#include <vector>

namespace nbody {

// -- Gaussian factor --------------------------------------------------------------

double log_gaussian_pair_factor(const Configuration& c, const SystemParams& params);
double gaussian_pair_factor(const Configuration& c, const SystemParams& params);

// -- Polynomial parts (generic, used on the exact path for vanishing checks) -----

/// sum_j H_{k+1}(beta (sigma_1 - N x_j)).
template <typename Scalar>
Scalar bose_excited_polynomial(int k, std::span<const Scalar> x, const Scalar& beta) {
  Scalar total(0);
  Scalar s1(0);
  for (const auto& xj : x) s1 += xj;
  const Scalar n(static_cast<int>(x.size()));
  for (const auto& xj : x) total += hermite(k + 1, beta * (s1 - n * xj));
  return total;
}

/// Double sum of the k-th excited Fermi state (k >= 1), with
/// coupling = 4 N sqrt(N) m omega / ((N-1) hbar):
///   sum_{i=0}^{(k+e)/2} sum_{j=0}^{2i+1-e} coupling^i (-1)^{i+j}
///     sigma_1^j V_{2i-j+1-e} / [((k+e)/2 - i)! j! (N+2i-j-e)! N^j],
/// e = k mod 2.
template <typename Scalar>
Scalar fermi_excited_polynomial(int k, const SymmetricContext<Scalar>& ctx, const Scalar& coupling) {
  const int e = epsilon_parity(k);
  const int top = (k + e) / 2;
  const int n = ctx.size();
  const auto v = v_table(2 * top + 1 - e, ctx);
  const Scalar s1 = ctx.sigma(1);
  Scalar acc(0);
  Scalar cpow(1);
  for (int i = 0; i <= top; ++i) {
    Scalar inner(0);
    Scalar s1_pow(1);
    Scalar n_pow(1);
    for (int j = 0; j <= 2 * i + 1 - e; ++j) {
      const Scalar term = s1_pow * v[static_cast<std::size_t>(2 * i - j + 1 - e)] /
                          (factorial<Scalar>(top - i) * factorial<Scalar>(j) *
                           factorial<Scalar>(n + 2 * i - j - e) * n_pow);
      if ((i + j) % 2 == 0) inner += term;
      else inner -= term;
      s1_pow *= s1;
      n_pow *= Scalar(n);
    }
    acc += cpow * inner;
    cpow *= coupling;
  }
  return acc;
}

/// General closed form for the last Jacobi quantum number lambda = lambda' + N - 1:
///   sum_{i=0}^{(l'-e)/2} sum_{j=0}^{2i+e} coupling^i (-1)^{i+j}
///     sigma_1^j V_{2i-j+e} / [((l'-e)/2 - i)! j! (N+2i-j-1+e)! N^j],
/// e = l' mod 2. lambda' = 1 is identically zero.
template <typename Scalar>
Scalar appendix_polynomial(int lambda_prime, const SymmetricContext<Scalar>& ctx,
                           const Scalar& coupling) {
  const int e = epsilon_parity(lambda_prime);
  const int top = (lambda_prime - e) / 2;
  const int n = ctx.size();
  const auto v = v_table(2 * top + e, ctx);
  const Scalar s1 = ctx.sigma(1);
  Scalar acc(0);
  Scalar cpow(1);
  for (int i = 0; i <= top; ++i) {
    Scalar inner(0);
    Scalar s1_pow(1);
    Scalar n_pow(1);
    for (int j = 0; j <= 2 * i + e; ++j) {
      const Scalar term = s1_pow * v[static_cast<std::size_t>(2 * i - j + e)] /
                          (factorial<Scalar>(top - i) * factorial<Scalar>(j) *
                           factorial<Scalar>(n + 2 * i - j - 1 + e) * n_pow);
      if ((i + j) % 2 == 0) inner += term;
      else inner -= term;
      s1_pow *= s1;
      n_pow *= Scalar(n);
    }
    acc += cpow * inner;
    cpow *= coupling;
  }
  return acc;
}

/// 4 N sqrt(N) m omega / ((N-1) hbar).
double fermi_coupling(const SystemParams& params);

/// sqrt(m omega / (sqrt(N) (N-1) hbar)).
double bose_excited_scale(const SystemParams& params);

/// True when the 1D closed form for the level is the zero function. Decided
/// exactly: the form is a sum of homogeneous pieces of distinct degree, one
/// per power of its irrational coupling, so it vanishes identically iff it
/// vanishes with the coupling set to 1. That is checked in rationals at
/// generic points.
bool closed_form_vanishes(Statistics stats, int n_particles, int excitation);

// -- Normalization constants ---------------------------------------------------

/// C_0 of the 1D Fermi ground state.
double fermi_ground_constant(const SystemParams& params);
/// C_1 of the first 1D Fermi excited state.
double fermi_first_excited_constant(const SystemParams& params);
/// Exact normalization of the pure Gaussian (Bose ground state, any D).
double bose_ground_constant(const SystemParams& params);

// -- Shell monomials -------------------------------------------------------------

struct MonomialIndex {
  std::vector<int> exponents;
  int degree() const;
  bool operator==(const MonomialIndex&) const = default;
};

/// All exponent tuples of total degree K in D variables, lexicographically
/// descending: (K,0,..), (K-1,1,..), ... Serial numbers are 1-based
/// positions in this list.
std::vector<MonomialIndex> monomial_basis(int K, int dimension);

/// Every admissible shell selection for N particles in D >= 2 dimensions:
/// all increasing leftover-subsets of 1..capacity, in lexicographic order.
std::vector<std::vector<int>> shell_selections(int n_particles, int dimension);

// -- Descriptors --------------------------------------------------------------------

struct WavefunctionDescriptor {
  Statistics statistics = Statistics::Fermi;
  int excitation = 0;
  SystemParams params;
  /// 1-based serial numbers into monomial_basis(K, D); only for D >= 2 Fermi
  /// ground states. Empty means the default {1, ..., leftover}.
  std::vector<int> shell_selection;
  bool normalized = true;

  /// Fills the default selection and checks every invariant.
  void validate();
};

// -- Evaluators ------------------------------------------------------------------------

LogAmplitude eval_bose_ground_log(const Configuration& c, const SystemParams& params,
                                  bool normalized = true);
double eval_bose_ground(const Configuration& c, const SystemParams& params, bool normalized = true);

/// Unnormalized (normalized = false) or Monte Carlo normalized.
LogAmplitude eval_bose_excited_log(int k, const Configuration& c, const SystemParams& params,
                                   bool normalized = false);
double eval_bose_excited(int k, const Configuration& c, const SystemParams& params,
                         bool normalized = false);

LogAmplitude eval_fermi_ground_1d_log(const Configuration& c, const SystemParams& params,
                                      bool normalized = true);
double eval_fermi_ground_1d(const Configuration& c, const SystemParams& params,
                            bool normalized = true);

/// k = 1 normalized uses the analytic C_1 and equals
/// C_1 [sum_{i<j} x_ij^2 - hbar sqrt(N)(N^2-1)/(2 m omega)] prod_{i<j} x_ij G.
LogAmplitude eval_fermi_excited_1d_log(int k, const Configuration& c, const SystemParams& params,
                                       bool normalized = false);
double eval_fermi_excited_1d(int k, const Configuration& c, const SystemParams& params,
                             bool normalized = false);

/// psi(lambda') for lambda' = lambda - N + 1. Normalized only for lambda' in
/// {0, 1, 2} (analytic constants); larger lambda' are returned unnormalized.
LogAmplitude eval_psi_lambda_appendix_log(int lambda_prime, const Configuration& c,
                                          const SystemParams& params, bool normalized = false);
double eval_psi_lambda_appendix(int lambda_prime, const Configuration& c,
                                const SystemParams& params, bool normalized = false);

/// The N x N monomial matrix whose determinant is psi_S: columns are every
/// monomial of shells 0..K-1, then the selected shell-K monomials.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> psi_s_matrix(
    const ConfigurationT<Scalar>& c, const WavefunctionDescriptor& desc);

double eval_psi_s(const Configuration& c, const WavefunctionDescriptor& desc);
LogAmplitude eval_psi_s_log(const Configuration& c, const WavefunctionDescriptor& desc);

/// C psi_S G. C from Monte Carlo when desc.normalized.
LogAmplitude eval_fermi_ground_d_log(const Configuration& c, const WavefunctionDescriptor& desc);
double eval_fermi_ground_d(const Configuration& c, const WavefunctionDescriptor& desc);

/// Descriptor-dispatched eigenfunction with its constant resolved once.
class Eigenfunction {
 public:
  explicit Eigenfunction(WavefunctionDescriptor desc);

  LogAmplitude log_eval(const Configuration& c) const;
  double operator()(const Configuration& c) const { return log_eval(c).value(); }

  /// Eigenvalue in units of hbar omega (relative motion, no center-of-mass term).
  double energy() const;
  /// Multiplicative constant applied on top of the unnormalized form.
  double constant() const { return constant_; }
  const WavefunctionDescriptor& descriptor() const { return desc_; }

 private:
  LogAmplitude raw_log_eval(const Configuration& c) const;

  WavefunctionDescriptor desc_;
  double constant_ = 1.0;
};

/// Monte Carlo normalization constant of the unnormalized form described by
/// desc, cached per descriptor. Fixed seed, so repeated calls and concurrent
/// first calls agree.
double numerical_constant(const WavefunctionDescriptor& desc);

}  // namespace nbody
