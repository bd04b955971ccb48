#pragma once

// Energy levels and degeneracies. All energies are in units of hbar*omega.

#include "nbody/core.hpp"
#include "nbody/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace nbody {

struct SpectrumLine {
  int label = 0;
  double energy = 0.0;
  /// Absent when the degeneracy of the level is not known in closed form.
  std::optional<BigInt> degeneracy;
  /// The closed-form eigenfunction attached to this level is the zero function.
  bool vanishes_identically = false;
};

/// Fictitious single-particle shell filling for N fermions in D dimensions.
/// Shell K holds the monomials of total degree K.
struct ShellStructure {
  std::int64_t K = 0;
  std::int64_t n_filled = 0;  // states in shells 0..K-1
  std::int64_t d_prev = 0;    // capacity of shell K-1
  std::int64_t capacity = 0;  // capacity of shell K
  std::int64_t leftover = 0;  // N - n_filled, in 1..capacity
};

/// Exact binomial coefficient; throws std::overflow_error beyond int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

ShellStructure shell_structure(int n_particles, int dimension);

SpectrumLine energy_1d_bose(int k, const SystemParams& params);
SpectrumLine energy_1d_fermi(int i, const SystemParams& params);

/// E_0 / (sqrt(N) hbar omega) as an exact rational:
///   (K + D/2) N - (1/(D+1)!) prod_{i=0}^{D} (K+i) - D/2.
Rational ground_energy_coefficient(int n_particles, int dimension);

/// Ground energy of N fermions in D dimensions.
double ground_energy_fermi_d(const SystemParams& params);
double ground_energy_fermi_d(int n_particles, int dimension);

/// Leading large-N term sqrt(N) (D N/(D+1)) [D! (N-1)]^{1/D}.
double asymptotic_ground_energy(std::int64_t n_particles, int dimension);

/// binomial(capacity, leftover) of the partially filled shell.
BigInt degeneracy_ground_d(int n_particles, int dimension);

/// E_0 + i sqrt(N). Requires D >= 2; the one-dimensional spectrum has a gap
/// that this form does not, use energy_1d_fermi there.
SpectrumLine energy_d_excited(int i, const SystemParams& params);

/// Lowest `levels` lines for (N, D, statistics). Bose is one-dimensional only.
std::vector<SpectrumLine> spectrum(const SystemParams& params, Statistics stats, int levels);

struct Figure1Row {
  int n_particles;
  int dimension;
  double e0;
};

/// Ground energies for every N in [n_min, n_max] and each dimension,
/// N-major order.
std::vector<Figure1Row> figure1_table(int n_min, int n_max, const std::vector<int>& dimensions);

void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows);
void write_figure1_json(std::ostream& out, const std::vector<Figure1Row>& rows);

}  // namespace nbody
