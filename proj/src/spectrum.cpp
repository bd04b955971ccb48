#include "nbody/spectrum.hpp"

#include "nbody/wavefn.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace nbody {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binomial: result exceeds int64");
    }
  }
  return static_cast<std::int64_t>(r);
}

// (1/D!) prod_{i=0}^{D-1} (K+i) = C(K+D-1, D) and (1/D!) prod_{i=1}^{D} (K+i)
// = C(K+D, D); the search walks K upward until N-1 falls between them.
ShellStructure shell_structure(int n_particles, int dimension) {
  if (n_particles < 2) throw std::invalid_argument("shell_structure: N must be >= 2");
  if (dimension < 1) throw std::invalid_argument("shell_structure: D must be >= 1");
  const std::int64_t target = n_particles - 1;
  const std::int64_t d = dimension;
  for (std::int64_t K = 1;; ++K) {
    const std::int64_t below = binomial(K + d - 1, d);
    const std::int64_t through = binomial(K + d, d);
    if (below <= target && target < through) {
      ShellStructure s;
      s.K = K;
      s.n_filled = below;
      s.d_prev = binomial(K + d - 2, d - 1);
      s.capacity = binomial(K + d - 1, d - 1);
      s.leftover = n_particles - below;
      return s;
    }
  }
}

namespace {

double sqrt_n(int n) { return std::sqrt(static_cast<double>(n)); }

void require_1d(const SystemParams& params, const char* what) {
  params.validate();
  if (params.dimension != 1) {
    throw std::invalid_argument(std::string(what) + ": requires dimension 1");
  }
}

}  // namespace

SpectrumLine energy_1d_bose(int k, const SystemParams& params) {
  require_1d(params, "energy_1d_bose");
  if (k < 0) throw std::invalid_argument("energy_1d_bose: negative label");
  const int n = params.n_particles;
  const double e0 = 0.5 * (n - 1) * sqrt_n(n);
  SpectrumLine line;
  line.label = k;
  line.energy = k == 0 ? e0 : e0 + (k + 1) * sqrt_n(n);
  line.degeneracy = BigInt(1);
  line.vanishes_identically = closed_form_vanishes(Statistics::Bose, n, k);
  return line;
}

SpectrumLine energy_1d_fermi(int i, const SystemParams& params) {
  require_1d(params, "energy_1d_fermi");
  if (i < 0) throw std::invalid_argument("energy_1d_fermi: negative label");
  const int n = params.n_particles;
  const double e0 = 0.5 * (static_cast<double>(n) * n - 1.0) * sqrt_n(n);
  SpectrumLine line;
  line.label = i;
  line.energy = i == 0 ? e0 : e0 + (i + 1) * sqrt_n(n);
  line.degeneracy = BigInt(1);
  line.vanishes_identically = closed_form_vanishes(Statistics::Fermi, n, i);
  return line;
}

Rational ground_energy_coefficient(int n_particles, int dimension) {
  const auto s = shell_structure(n_particles, dimension);
  const Rational half_d = Rational(dimension) / 2;
  // (1/(D+1)!) prod_{i=0}^{D} (K+i) = C(K+D, D+1)
  const BigInt top = BigInt(binomial(s.K + dimension, dimension + 1));
  return (Rational(s.K) + half_d) * n_particles - Rational(top) - half_d;
}

double ground_energy_fermi_d(int n_particles, int dimension) {
  return to_double(ground_energy_coefficient(n_particles, dimension)) * sqrt_n(n_particles);
}

double ground_energy_fermi_d(const SystemParams& params) {
  params.validate();
  return ground_energy_fermi_d(params.n_particles, params.dimension);
}

double asymptotic_ground_energy(std::int64_t n_particles, int dimension) {
  if (n_particles < 2 || dimension < 1) {
    throw std::invalid_argument("asymptotic_ground_energy: need N >= 2, D >= 1");
  }
  const double n = static_cast<double>(n_particles);
  const double d = dimension;
  const double d_fact = std::tgamma(d + 1.0);
  return std::sqrt(n) * (d * n / (d + 1.0)) * std::pow(d_fact * (n - 1.0), 1.0 / d);
}

BigInt degeneracy_ground_d(int n_particles, int dimension) {
  const auto s = shell_structure(n_particles, dimension);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= s.leftover; ++i) {
    r *= BigInt(s.capacity - s.leftover + i);
    r /= BigInt(i);
  }
  return r;
}

SpectrumLine energy_d_excited(int i, const SystemParams& params) {
  params.validate();
  if (params.dimension < 2) {
    throw std::invalid_argument(
        "energy_d_excited: dimension 1 has a missing first level; use energy_1d_fermi");
  }
  if (i < 0) throw std::invalid_argument("energy_d_excited: negative label");
  SpectrumLine line;
  line.label = i;
  line.energy = ground_energy_fermi_d(params) + i * sqrt_n(params.n_particles);
  if (i == 0) line.degeneracy = degeneracy_ground_d(params.n_particles, params.dimension);
  return line;
}

std::vector<SpectrumLine> spectrum(const SystemParams& params, Statistics stats, int levels) {
  params.validate();
  if (levels < 0) throw std::invalid_argument("spectrum: negative level count");
  std::vector<SpectrumLine> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) {
    if (params.dimension == 1) {
      out.push_back(stats == Statistics::Bose ? energy_1d_bose(i, params) : energy_1d_fermi(i, params));
    } else if (stats == Statistics::Fermi) {
      out.push_back(energy_d_excited(i, params));
    } else {
      throw std::invalid_argument("spectrum: Bose spectra are available in one dimension only");
    }
  }
  return out;
}

std::vector<Figure1Row> figure1_table(int n_min, int n_max, const std::vector<int>& dimensions) {
  if (n_min < 2) throw std::invalid_argument("figure1_table: N must be >= 2");
  std::vector<Figure1Row> rows;
  for (int n = n_min; n <= n_max; ++n)
    for (int d : dimensions) rows.push_back({n, d, ground_energy_fermi_d(n, d)});
  return rows;
}

void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows) {
  out << "N,D,E0\n" << std::setprecision(17);
  for (const auto& r : rows) out << r.n_particles << ',' << r.dimension << ',' << r.e0 << '\n';
}

void write_figure1_json(std::ostream& out, const std::vector<Figure1Row>& rows) {
  nlohmann::json doc;
  doc["units"] = "hbar_omega";
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) doc["rows"].push_back({{"N", r.n_particles}, {"D", r.dimension}, {"E0", r.e0}});
  out << doc.dump() << '\n';
}

}  // namespace nbody
