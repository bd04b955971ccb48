#include "nbody/wavefn.hpp"

#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"
#include "nbody/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nbody {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

LogAmplitude from_value(double v) {
  if (v == 0.0) return {kNegInf, 0};
  return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

LogAmplitude times(LogAmplitude a, LogAmplitude b) {
  if (a.sign == 0 || b.sign == 0) return {kNegInf, 0};
  return {a.log_abs + b.log_abs, a.sign * b.sign};
}

LogAmplitude times(LogAmplitude a, double factor) { return times(a, from_value(factor)); }

// prod_{i<j} (x_i - x_j) along column 0.
LogAmplitude log_antisymmetric_factor(const Configuration& c) {
  LogAmplitude r{0.0, 1};
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = i + 1; j < c.rows(); ++j) {
      const double d = c(i, 0) - c(j, 0);
      if (d == 0.0) return {kNegInf, 0};
      r.log_abs += std::log(std::abs(d));
      if (d < 0) r.sign = -r.sign;
    }
  return r;
}

// The polynomial parts are translation invariant; evaluating them at
// centroid-relative coordinates avoids cancellation between large sigma_1
// powers.
// Extended precision keeps the alternating sums accurate near their nodes.
using Wide = long double;

std::vector<Wide> centered_column(const Configuration& c) {
  std::vector<Wide> x(static_cast<std::size_t>(c.rows()));
  Wide mean = 0;
  for (Eigen::Index i = 0; i < c.rows(); ++i) mean += c(i, 0);
  mean /= static_cast<Wide>(c.rows());
  for (Eigen::Index i = 0; i < c.rows(); ++i) x[static_cast<std::size_t>(i)] = c(i, 0) - mean;
  return x;
}

void require_1d(const Configuration& c, const SystemParams& params, const char* what) {
  params.validate();
  if (params.dimension != 1) throw std::invalid_argument(std::string(what) + ": requires dimension 1");
  check_configuration(c, params);
}

// log of prod_{i=1}^{N} 2^{i-1} / i!
double log_power_factorial_product(int n) {
  double s = 0.0;
  for (int i = 1; i <= n; ++i) s += (i - 1) * std::numbers::ln2 - std::lgamma(i + 1.0);
  return s;
}

double log_fermi_ground_constant(const SystemParams& p) {
  const double n = p.n_particles;
  const double inner = 0.5 * (n * n - 1.0) * std::log(p.mass * p.omega / p.hbar) +
                       0.5 * (1.0 - n) * std::log(std::numbers::pi) +
                       0.25 * (n * n - 3.0) * std::log(n) + log_power_factorial_product(p.n_particles);
  return 0.5 * inner;
}

double log_fermi_first_excited_constant(const SystemParams& p) {
  const double n = p.n_particles;
  const double inner = 0.5 * (n * n + 3.0) * std::log(p.mass * p.omega / p.hbar) +
                       std::log(2.0 / (n * (n * n - 1.0))) +
                       0.5 * (1.0 - n) * std::log(std::numbers::pi) +
                       0.25 * (n * n - 3.0) * std::log(n) + log_power_factorial_product(p.n_particles);
  return 0.5 * inner;
}

// Multiplier taking the unnormalized k = 1 double sum onto
// [sum x_ij^2 - hbar sqrt(N)(N^2-1)/(2 m omega)]: the sum equals
// -(coupling / (2 N (N+1)!)) times that bracket.
double first_excited_bracket_factor(const SystemParams& p) {
  const int n = p.n_particles;
  return -2.0 * n * std::tgamma(n + 2.0) / fermi_coupling(p);
}

// Generic rational points for the exact vanishing checks.
std::vector<Rational> generic_point(int n, int trial) {
  std::vector<Rational> x;
  for (int j = 1; j <= n; ++j) {
    x.emplace_back(Rational(3 * j * j + 7 * j + 2 + 5 * trial, 11 + 5 * j + 3 * trial) -
                   Rational(j * trial, 13));
  }
  return x;
}

}  // namespace

// -- Gaussian --------------------------------------------------------------------

double log_gaussian_pair_factor(const Configuration& c, const SystemParams& params) {
  const double coeff = params.mass * params.omega /
                       (2.0 * std::sqrt(static_cast<double>(params.n_particles)) * params.hbar);
  return -coeff * pair_distance_sum(c);
}

double gaussian_pair_factor(const Configuration& c, const SystemParams& params) {
  return std::exp(log_gaussian_pair_factor(c, params));
}

double fermi_coupling(const SystemParams& p) {
  const double n = p.n_particles;
  return 4.0 * n * std::sqrt(n) * p.mass * p.omega / ((n - 1.0) * p.hbar);
}

double bose_excited_scale(const SystemParams& p) {
  const double n = p.n_particles;
  return std::sqrt(p.mass * p.omega / (std::sqrt(n) * (n - 1.0) * p.hbar));
}

bool closed_form_vanishes(Statistics stats, int n_particles, int excitation) {
  if (n_particles < 2) throw std::invalid_argument("closed_form_vanishes: N must be >= 2");
  if (excitation < 0) throw std::invalid_argument("closed_form_vanishes: negative excitation");
  if (excitation == 0) return false;
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = generic_point(n_particles, trial);
    Rational value;
    if (stats == Statistics::Bose) {
      value = bose_excited_polynomial<Rational>(excitation, std::span<const Rational>(x), Rational(1));
    } else {
      value = fermi_excited_polynomial<Rational>(excitation, SymmetricContext<Rational>(x), Rational(1));
    }
    if (value != 0) return false;
  }
  return true;
}

// -- Constants -------------------------------------------------------------------------

double fermi_ground_constant(const SystemParams& params) {
  params.validate();
  return std::exp(log_fermi_ground_constant(params));
}

double fermi_first_excited_constant(const SystemParams& params) {
  params.validate();
  return std::exp(log_fermi_first_excited_constant(params));
}

double bose_ground_constant(const SystemParams& params) {
  params.validate();
  // integral of G^2 = prod_i (pi / alpha_i^2)^{D/2} over the relative modes
  double log_c = 0.0;
  for (int i = 1; i < params.n_particles; ++i) {
    const double alpha = oracle::mode_alpha(i, params);
    log_c += 0.25 * params.dimension * std::log(alpha * alpha / std::numbers::pi);
  }
  return std::exp(log_c);
}

// -- Monomials ----------------------------------------------------------------------------

int MonomialIndex::degree() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

namespace {

void compositions(int remaining, int slots, std::vector<int>& prefix, std::vector<MonomialIndex>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    compositions(remaining - e, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MonomialIndex> monomial_basis(int K, int dimension) {
  if (K < 0) throw std::invalid_argument("monomial_basis: negative degree");
  if (dimension < 1) throw std::invalid_argument("monomial_basis: dimension must be >= 1");
  std::vector<MonomialIndex> out;
  std::vector<int> prefix;
  compositions(K, dimension, prefix, out);
  return out;
}

std::vector<std::vector<int>> shell_selections(int n_particles, int dimension) {
  if (dimension < 2) throw std::invalid_argument("shell_selections: requires D >= 2");
  const auto shell = shell_structure(n_particles, dimension);
  if (binomial(shell.capacity, shell.leftover) > 100000) {
    throw std::invalid_argument("shell_selections: too many selections to enumerate");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(shell.leftover));
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = static_cast<int>(i) + 1;
  const auto cap = static_cast<int>(shell.capacity);
  while (true) {
    out.push_back(pick);
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == cap - static_cast<int>(pick.size()) + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// -- Descriptor -----------------------------------------------------------------------------

void WavefunctionDescriptor::validate() {
  params.validate();
  if (excitation < 0) throw std::invalid_argument("descriptor: negative excitation");
  const bool shell_state = params.dimension >= 2 && statistics == Statistics::Fermi && excitation == 0;
  if (params.dimension >= 2 && excitation > 0) {
    throw std::invalid_argument("descriptor: excited eigenfunctions exist in one dimension only");
  }
  if (!shell_state) {
    if (!shell_selection.empty()) {
      throw std::invalid_argument("descriptor: shell selection applies only to D >= 2 Fermi ground states");
    }
    return;
  }
  const auto shell = shell_structure(params.n_particles, params.dimension);
  if (shell_selection.empty()) {
    for (std::int64_t s = 1; s <= shell.leftover; ++s) shell_selection.push_back(static_cast<int>(s));
  }
  if (static_cast<std::int64_t>(shell_selection.size()) != shell.leftover) {
    throw std::invalid_argument("descriptor: shell selection has " + std::to_string(shell_selection.size()) +
                                " entries, expected " + std::to_string(shell.leftover));
  }
  for (std::size_t i = 0; i < shell_selection.size(); ++i) {
    const int s = shell_selection[i];
    if (s < 1 || s > shell.capacity) {
      throw std::invalid_argument("descriptor: shell serial " + std::to_string(s) + " outside 1.." +
                                  std::to_string(shell.capacity));
    }
    if (i > 0 && s <= shell_selection[i - 1]) {
      throw std::invalid_argument("descriptor: shell selection must be strictly increasing without duplicates");
    }
  }
}

namespace {

std::string cache_key(const WavefunctionDescriptor& d) {
  std::ostringstream k;
  k.precision(17);
  k << to_string(d.statistics) << '|' << d.excitation << '|' << d.params.n_particles << '|'
    << d.params.dimension << '|' << d.params.mass << '|' << d.params.omega << '|' << d.params.hbar;
  for (int s : d.shell_selection) k << '|' << s;
  return k.str();
}

// Analytic constant if one exists, else Monte Carlo.
double resolve_constant(const WavefunctionDescriptor& d) {
  const auto& p = d.params;
  if (d.statistics == Statistics::Bose && d.excitation == 0) return bose_ground_constant(p);
  if (d.statistics == Statistics::Fermi && p.dimension == 1) {
    if (d.excitation == 0) return fermi_ground_constant(p);
    if (d.excitation == 1) return fermi_first_excited_constant(p) * first_excited_bracket_factor(p);
  }
  return numerical_constant(d);
}

WavefunctionDescriptor make_descriptor(Statistics s, int k, const SystemParams& p) {
  WavefunctionDescriptor d;
  d.statistics = s;
  d.excitation = k;
  d.params = p;
  d.validate();
  return d;
}

}  // namespace

// -- 1D evaluators ----------------------------------------------------------------------------

LogAmplitude eval_bose_ground_log(const Configuration& c, const SystemParams& params, bool normalized) {
  params.validate();
  check_configuration(c, params);
  LogAmplitude r{log_gaussian_pair_factor(c, params), 1};
  if (normalized) r = times(r, bose_ground_constant(params));
  return r;
}

double eval_bose_ground(const Configuration& c, const SystemParams& params, bool normalized) {
  return eval_bose_ground_log(c, params, normalized).value();
}

LogAmplitude eval_bose_excited_log(int k, const Configuration& c, const SystemParams& params,
                                   bool normalized) {
  if (k < 1) throw std::invalid_argument("eval_bose_excited: k must be >= 1 (k = 0 is the ground state)");
  require_1d(c, params, "eval_bose_excited");
  const auto x = centered_column(c);
  const auto poly = static_cast<double>(
      bose_excited_polynomial<Wide>(k, std::span<const Wide>(x), static_cast<Wide>(bose_excited_scale(params))));
  LogAmplitude r = times(from_value(poly), LogAmplitude{log_gaussian_pair_factor(c, params), 1});
  if (normalized) r = times(r, resolve_constant(make_descriptor(Statistics::Bose, k, params)));
  return r;
}

double eval_bose_excited(int k, const Configuration& c, const SystemParams& params, bool normalized) {
  return eval_bose_excited_log(k, c, params, normalized).value();
}

LogAmplitude eval_fermi_ground_1d_log(const Configuration& c, const SystemParams& params, bool normalized) {
  require_1d(c, params, "eval_fermi_ground_1d");
  LogAmplitude r = times(log_antisymmetric_factor(c), LogAmplitude{log_gaussian_pair_factor(c, params), 1});
  if (normalized && r.sign != 0) r.log_abs += log_fermi_ground_constant(params);
  return r;
}

double eval_fermi_ground_1d(const Configuration& c, const SystemParams& params, bool normalized) {
  return eval_fermi_ground_1d_log(c, params, normalized).value();
}

LogAmplitude eval_fermi_excited_1d_log(int k, const Configuration& c, const SystemParams& params,
                                       bool normalized) {
  if (k < 1) throw std::invalid_argument("eval_fermi_excited_1d: k must be >= 1 (k = 0 is the ground state)");
  require_1d(c, params, "eval_fermi_excited_1d");
  const auto ctx = SymmetricContext<Wide>(centered_column(c));
  const auto poly = static_cast<double>(fermi_excited_polynomial<Wide>(k, ctx, fermi_coupling(params)));
  LogAmplitude r = times(log_antisymmetric_factor(c), LogAmplitude{log_gaussian_pair_factor(c, params), 1});
  r = times(r, from_value(poly));
  if (normalized) r = times(r, resolve_constant(make_descriptor(Statistics::Fermi, k, params)));
  return r;
}

double eval_fermi_excited_1d(int k, const Configuration& c, const SystemParams& params, bool normalized) {
  return eval_fermi_excited_1d_log(k, c, params, normalized).value();
}

LogAmplitude eval_psi_lambda_appendix_log(int lambda_prime, const Configuration& c,
                                          const SystemParams& params, bool normalized) {
  if (lambda_prime < 0) throw std::invalid_argument("eval_psi_lambda_appendix: negative lambda'");
  require_1d(c, params, "eval_psi_lambda_appendix");
  const auto ctx = SymmetricContext<Wide>(centered_column(c));
  const auto poly = static_cast<double>(appendix_polynomial<Wide>(lambda_prime, ctx, fermi_coupling(params)));
  LogAmplitude r = times(log_antisymmetric_factor(c), LogAmplitude{log_gaussian_pair_factor(c, params), 1});
  r = times(r, from_value(poly));
  if (normalized) {
    if (lambda_prime == 0) {
      r = times(r, fermi_ground_constant(params) * std::tgamma(params.n_particles));
    } else if (lambda_prime == 2) {
      r = times(r, fermi_first_excited_constant(params) * first_excited_bracket_factor(params));
    }
  }
  return r;
}

double eval_psi_lambda_appendix(int lambda_prime, const Configuration& c, const SystemParams& params,
                                bool normalized) {
  return eval_psi_lambda_appendix_log(lambda_prime, c, params, normalized).value();
}

// -- D-dimensional ground states ---------------------------------------------------------------

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> psi_s_matrix(const ConfigurationT<Scalar>& c,
                                                                   const WavefunctionDescriptor& desc) {
  const auto shell = shell_structure(desc.params.n_particles, desc.params.dimension);
  const int n = desc.params.n_particles;
  const int dim = desc.params.dimension;
  if (c.rows() != n || c.cols() != dim) throw std::invalid_argument("psi_s_matrix: configuration shape");
  std::vector<MonomialIndex> columns;
  for (int k = 0; k < shell.K; ++k) {
    const auto b = monomial_basis(k, dim);
    columns.insert(columns.end(), b.begin(), b.end());
  }
  const auto top = monomial_basis(static_cast<int>(shell.K), dim);
  for (int s : desc.shell_selection) columns.push_back(top.at(static_cast<std::size_t>(s - 1)));
  if (static_cast<int>(columns.size()) != n) throw std::logic_error("psi_s_matrix: column count");

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar v(1);
      const auto& e = columns[static_cast<std::size_t>(j)].exponents;
      for (int a = 0; a < dim; ++a) v *= ipow(c(i, a), e[static_cast<std::size_t>(a)]);
      m(i, j) = v;
    }
  return m;
}

template Eigen::MatrixXd psi_s_matrix<double>(const Configuration&, const WavefunctionDescriptor&);
template Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> psi_s_matrix<Rational>(
    const ConfigurationT<Rational>&, const WavefunctionDescriptor&);

namespace {

WavefunctionDescriptor checked_shell_descriptor(const WavefunctionDescriptor& desc) {
  WavefunctionDescriptor d = desc;
  if (d.params.dimension < 2 || d.statistics != Statistics::Fermi || d.excitation != 0) {
    throw std::invalid_argument("psi_S: requires a D >= 2 Fermi ground-state descriptor");
  }
  d.validate();
  return d;
}

}  // namespace

LogAmplitude eval_psi_s_log(const Configuration& c, const WavefunctionDescriptor& desc) {
  const auto d = checked_shell_descriptor(desc);
  check_configuration(c, d.params);
  const Eigen::MatrixXd m = psi_s_matrix<double>(c, d);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const auto& u = lu.matrixLU();
  LogAmplitude r{0.0, static_cast<int>(lu.permutationP().determinant())};
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const double p = u(i, i);
    if (p == 0.0) return {kNegInf, 0};
    r.log_abs += std::log(std::abs(p));
    if (p < 0) r.sign = -r.sign;
  }
  return r;
}

double eval_psi_s(const Configuration& c, const WavefunctionDescriptor& desc) {
  return eval_psi_s_log(c, desc).value();
}

LogAmplitude eval_fermi_ground_d_log(const Configuration& c, const WavefunctionDescriptor& desc) {
  const auto d = checked_shell_descriptor(desc);
  LogAmplitude r = times(eval_psi_s_log(c, d), LogAmplitude{log_gaussian_pair_factor(c, d.params), 1});
  if (d.normalized) r = times(r, numerical_constant(d));
  return r;
}

double eval_fermi_ground_d(const Configuration& c, const WavefunctionDescriptor& desc) {
  return eval_fermi_ground_d_log(c, desc).value();
}

// -- Eigenfunction -------------------------------------------------------------------------------

Eigenfunction::Eigenfunction(WavefunctionDescriptor desc) : desc_(std::move(desc)) {
  desc_.validate();
  if (desc_.normalized) constant_ = resolve_constant(desc_);
}

LogAmplitude Eigenfunction::raw_log_eval(const Configuration& c) const {
  const auto& p = desc_.params;
  if (desc_.statistics == Statistics::Bose) {
    if (desc_.excitation == 0) return eval_bose_ground_log(c, p, false);
    return eval_bose_excited_log(desc_.excitation, c, p, false);
  }
  if (p.dimension == 1) {
    if (desc_.excitation == 0) return eval_fermi_ground_1d_log(c, p, false);
    return eval_fermi_excited_1d_log(desc_.excitation, c, p, false);
  }
  auto raw = desc_;
  raw.normalized = false;
  return eval_fermi_ground_d_log(c, raw);
}

LogAmplitude Eigenfunction::log_eval(const Configuration& c) const {
  return times(raw_log_eval(c), constant_);
}

double Eigenfunction::energy() const {
  const auto& p = desc_.params;
  if (desc_.statistics == Statistics::Bose) {
    if (p.dimension == 1) return energy_1d_bose(desc_.excitation, p).energy;
    // Gaussian ground state: zero-point energy of D(N-1) modes at sqrt(N) omega.
    return 0.5 * p.dimension * (p.n_particles - 1) * std::sqrt(static_cast<double>(p.n_particles));
  }
  if (p.dimension == 1) return energy_1d_fermi(desc_.excitation, p).energy;
  return ground_energy_fermi_d(p);
}

double numerical_constant(const WavefunctionDescriptor& desc) {
  static std::mutex mutex;
  static std::map<std::string, double> cache;
  WavefunctionDescriptor raw = desc;
  raw.normalized = false;
  raw.validate();
  const auto key = cache_key(raw);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  constexpr std::size_t kSamples = 200000;
  constexpr std::uint64_t kSeed = 0x5eed2024ULL;
  const Eigenfunction psi(raw);
  const auto est = oracle::mc_normalize([&psi](const Configuration& c) { return psi.log_eval(c); },
                                        raw.params, kSamples, kSeed);
  const double constant = 1.0 / std::sqrt(est.value);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, constant).first->second;
}

}  // namespace nbody
