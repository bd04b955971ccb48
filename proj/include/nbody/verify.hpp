#pragma once

// Verification suites that compare closed forms against the brute-force
// oracles. Failures are reported, never thrown.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nbody::verify {

struct CheckResult {
  std::string check;
  nlohmann::json parameters;
  double metric = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// identities, oracle1d, residuals, normalization, symmetry, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& suite, std::uint64_t seed);

// Individual groups, also used by the acceptance tests.

/// Exact hyper-Vandermonde, antisymmetrized power, V = h and sigma checks
/// over random small rationals.
std::vector<CheckResult> identity_checks(std::uint64_t seed, int inputs_per_case = 50);

/// Closed forms against explicit permutation sums, N = 2..5, excitations <= 4,
/// plus the vanishing cases of the general closed form.
std::vector<CheckResult> closed_form_checks(std::uint64_t seed, int points = 100);

/// Grid spectra for N = 2, 3 against the formula levels with vanishing ones
/// skipped.
std::vector<CheckResult> grid_checks();

/// Hamiltonian residuals at Gaussian-sampled points.
std::vector<CheckResult> residual_checks(std::uint64_t seed, int points = 50);

/// Monte Carlo norms with the analytic constants.
std::vector<CheckResult> normalization_checks(std::uint64_t seed, std::size_t samples = 1000000);

/// psi(P c) = a(P) psi(c) for every transposition.
std::vector<CheckResult> symmetry_checks(std::uint64_t seed, int points = 100);

}  // namespace nbody::verify
