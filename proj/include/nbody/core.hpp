#pragma once

// Shared domain types for N identical particles with harmonic pair
// interactions: system parameters, particle configurations, permutations
// and the exchange-statistics tag.

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbody {

enum class Statistics { Bose, Fermi };

std::string to_string(Statistics s);
Statistics parse_statistics(const std::string& name);

/// Physical context of every formula. Defaults are natural units.
struct SystemParams {
  int n_particles = 2;
  int dimension = 1;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;

  double hbar_omega() const { return hbar * omega; }

  static SystemParams natural(int n_particles, int dimension = 1);
};

/// sqrt(N) * omega, the frequency of every decoupled relative mode.
double effective_frequency(const SystemParams& params);

/// mu_i = i/(i+1) m for the i-th Jacobi mode, 1 <= i <= N-1.
double reduced_mass(int i, const SystemParams& params);

/// Oscillator length sqrt(hbar / (m omega')) of the relative modes.
double relative_length_scale(const SystemParams& params);

/// A real amplitude as (log|psi|, sign). sign is 0 at a node, where
/// log_abs is -infinity.
struct LogAmplitude {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

/// N x D coordinates, one particle per row.
template <typename Scalar>
using ConfigurationT =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Configuration = ConfigurationT<double>;

/// Throws std::invalid_argument unless c is N x D with finite entries.
void check_configuration(const Configuration& c, const SystemParams& params);

/// A bijection on {0..N-1}. Row i of a permuted configuration is row p(i)
/// of the original.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& mapping() const { return map_; }

  /// +1 for even, -1 for odd; by cycle decomposition.
  int sign() const;

  /// Composition matching the action on configurations:
  /// apply(p * q, c) == apply(p, apply(q, c)), i.e. (p * q)(i) = q(p(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

int permutation_sign(const Permutation& p);

/// Every permutation of n elements in lexicographic order. n! entries.
std::vector<Permutation> all_permutations(int n);

template <typename Scalar>
ConfigurationT<Scalar> apply_permutation(const Permutation& p,
                                         const ConfigurationT<Scalar>& c) {
  if (p.size() != c.rows()) {
    throw std::invalid_argument("apply_permutation: size mismatch");
  }
  ConfigurationT<Scalar> out(c.rows(), c.cols());
  for (int i = 0; i < p.size(); ++i) out.row(i) = c.row(p(i));
  return out;
}

/// Single configuration: one particle per line, D comma-separated columns,
/// optional header line.
Configuration read_configuration_csv(std::istream& in);
Configuration read_configuration_csv_file(const std::string& path);

/// Batch input: one configuration per line flattened particle-major
/// (x1, y1, ..., x2, y2, ...). Optional header. Errors name the line number.
std::vector<Configuration> read_configuration_batch(std::istream& in, int n_particles,
                                                    int dimension);

/// Worker count for parallel loops: hardware concurrency capped by the
/// NBODY_THREADS environment variable.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// body must only write to per-index state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nbody
