#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"
#include "nbody/spectrum.hpp"
#include "nbody/wavefn.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nbody;

namespace {

Configuration random_config(std::mt19937_64& rng, int n, int d = 1) {
  std::normal_distribution<double> g(0.0, 0.8);
  Configuration c(n, d);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) c(i, a) = g(rng);
  return c;
}

Configuration line(std::initializer_list<double> x) {
  Configuration c(static_cast<Eigen::Index>(x.size()), 1);
  Eigen::Index i = 0;
  for (double v : x) c(i++, 0) = v;
  return c;
}

double pair_square_sum(const Configuration& c) { return pair_distance_sum(c); }

double vandermonde(const Configuration& c) {
  double p = 1.0;
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = i + 1; j < c.rows(); ++j) p *= c(i, 0) - c(j, 0);
  return p;
}

}  // namespace

TEST_CASE("gaussian pair factor") {
  const auto p = SystemParams::natural(2);
  CHECK(gaussian_pair_factor(line({1, 0}), p) == doctest::Approx(std::exp(-1.0 / (2.0 * std::sqrt(2.0)))));
  CHECK(gaussian_pair_factor(line({1, 0}), p) == doctest::Approx(0.70219).epsilon(1e-5));
  CHECK(gaussian_pair_factor(line({0.3, 0.3}), p) == 1.0);
  const auto p3 = SystemParams::natural(3, 2);
  std::mt19937_64 rng(1);
  const auto c = random_config(rng, 3, 2);
  Configuration shifted = c;
  shifted.col(0).array() += 2.0;
  CHECK(gaussian_pair_factor(c, p3) == doctest::Approx(gaussian_pair_factor(shifted, p3)).epsilon(1e-13));
  CHECK(log_gaussian_pair_factor(c, p3) == doctest::Approx(std::log(gaussian_pair_factor(c, p3))));
}

TEST_CASE("normalization constants frozen from quadrature") {
  CHECK(fermi_ground_constant(SystemParams::natural(2)) == doctest::Approx(0.819108214441421601974).epsilon(1e-13));
  CHECK(fermi_first_excited_constant(SystemParams::natural(2)) ==
        doctest::Approx(0.472912348103188468021).epsilon(1e-13));
  CHECK(fermi_ground_constant(SystemParams::natural(3)) == doctest::Approx(1.050075135808663978777).epsilon(1e-13));
  CHECK(fermi_first_excited_constant(SystemParams::natural(3)) ==
        doctest::Approx(0.303130581164232490549).epsilon(1e-13));
}

TEST_CASE("normalized two-fermion ground state at a point") {
  CHECK(eval_fermi_ground_1d(line({1, 0}), SystemParams::natural(2)) ==
        doctest::Approx(0.57516836952289603478).epsilon(1e-14));
}

TEST_CASE("bose ground state") {
  const auto p = SystemParams::natural(3);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto c = random_config(rng, 3);
    CHECK(eval_bose_ground(c, p) / gaussian_pair_factor(c, p) == doctest::Approx(bose_ground_constant(p)));
  }
  // Normalization over the two relative modes.
  const double a1 = oracle::mode_alpha(1, p);
  const double a2 = oracle::mode_alpha(2, p);
  CHECK(bose_ground_constant(p) == doctest::Approx(std::sqrt(a1 * a2 / std::numbers::pi)));
}

TEST_CASE("fermi ground state has Pauli nodes") {
  const auto p = SystemParams::natural(4);
  CHECK(eval_fermi_ground_1d(line({0.1, 0.5, 0.5, -0.2}), p) == 0.0);
  const auto v = eval_fermi_ground_1d_log(line({0.1, 0.5, 0.5, -0.2}), p);
  CHECK(v.sign == 0);
}

TEST_CASE("two fermions match the explicit odd relative state") {
  const auto p = SystemParams::natural(2);
  std::mt19937_64 rng(3);
  double first = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto c = random_config(rng, 2);
    oracle::QuantumNumberSet q{{1}};
    const double ratio = eval_fermi_ground_1d(c, p) / oracle::antisymmetrize_product(q, c, Statistics::Fermi, p);
    if (t == 0) first = ratio;
    CHECK(ratio == doctest::Approx(first).epsilon(1e-12));
  }
}

TEST_CASE("first excited state equals the simplified form") {
  for (int n = 2; n <= 5; ++n) {
    auto p = SystemParams::natural(n);
    p.mass = 1.3;
    p.omega = 0.8;
    const double shift = p.hbar * std::sqrt(static_cast<double>(n)) * (n * n - 1.0) / (2.0 * p.mass * p.omega);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int t = 0; t < 20; ++t) {
      const auto c = random_config(rng, n);
      const double simple = fermi_first_excited_constant(p) * (pair_square_sum(c) - shift) * vandermonde(c) *
                            gaussian_pair_factor(c, p);
      CHECK(eval_fermi_excited_1d(1, c, p, true) == doctest::Approx(simple).epsilon(1e-9));
    }
  }
}

TEST_CASE("general closed form reproduces the ground state and loses lambda' = 1") {
  for (int n = 2; n <= 5; ++n) {
    const auto p = SystemParams::natural(n);
    std::mt19937_64 rng(10 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 20; ++t) {
      const auto c = random_config(rng, n);
      CHECK(eval_psi_lambda_appendix(0, c, p, true) / eval_fermi_ground_1d(c, p) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(eval_psi_lambda_appendix(2, c, p, true) ==
            doctest::Approx(eval_fermi_excited_1d(1, c, p, true)).epsilon(1e-9));
      CHECK(std::abs(eval_psi_lambda_appendix(1, c, p, false)) <=
            1e-12 * std::abs(eval_psi_lambda_appendix(0, c, p, false)));
    }
  }
}

TEST_CASE("vanishing closed forms") {
  CHECK(closed_form_vanishes(Statistics::Bose, 2, 2));
  CHECK(closed_form_vanishes(Statistics::Bose, 2, 4));
  CHECK(!closed_form_vanishes(Statistics::Bose, 2, 1));
  CHECK(closed_form_vanishes(Statistics::Fermi, 2, 2));
  CHECK(!closed_form_vanishes(Statistics::Fermi, 2, 3));
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k) {
      CHECK(!closed_form_vanishes(Statistics::Bose, n, k));
      CHECK(!closed_form_vanishes(Statistics::Fermi, n, k));
    }
  const auto p = SystemParams::natural(2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto c = random_config(rng, 2);
    CHECK(std::abs(eval_bose_excited(2, c, p)) < 1e-12);
  }
}

TEST_CASE("bose excited states are symmetric") {
  const auto p = SystemParams::natural(4);
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 3; ++k) {
    const auto c = random_config(rng, 4);
    const double base = eval_bose_excited(k, c, p);
    for (const auto& perm : all_permutations(4))
      CHECK(eval_bose_excited(k, apply_permutation(perm, c), p) == doctest::Approx(base).epsilon(1e-11));
  }
}

TEST_CASE("monomial basis") {
  const auto k1 = monomial_basis(1, 3);
  REQUIRE(k1.size() == 3);
  CHECK(k1[0].exponents == std::vector<int>{1, 0, 0});
  CHECK(k1[1].exponents == std::vector<int>{0, 1, 0});
  CHECK(k1[2].exponents == std::vector<int>{0, 0, 1});
  CHECK(monomial_basis(0, 4).size() == 1);
  const auto k2 = monomial_basis(2, 2);
  REQUIRE(k2.size() == 3);
  CHECK(k2[1].exponents == std::vector<int>{1, 1});
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k) {
      const auto b = monomial_basis(k, d);
      CHECK(static_cast<std::int64_t>(b.size()) == binomial(k + d - 1, d - 1));
      for (const auto& m : b) CHECK(m.degree() == k);
    }
}

TEST_CASE("shell selections") {
  const auto s = shell_selections(3, 3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == std::vector<int>{1, 2});
  CHECK(s[2] == std::vector<int>{2, 3});
  CHECK(shell_selections(4, 3).size() == 1);
  CHECK(static_cast<std::int64_t>(shell_selections(4, 2).size()) == degeneracy_ground_d(4, 2));
}

TEST_CASE("three particles in three dimensions expand as printed") {
  WavefunctionDescriptor d;
  d.params = SystemParams::natural(3, 3);
  d.shell_selection = {1, 2};
  d.validate();
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    ConfigurationT<Rational> c(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 3; ++a) c(i, a) = random_small_rational(rng);
    auto x = [&](int i) { return c(i - 1, 0); };
    auto y = [&](int i) { return c(i - 1, 1); };
    const Rational expected =
        x(2) * y(3) - x(3) * y(2) + x(1) * y(2) - x(2) * y(1) + x(3) * y(1) - x(1) * y(3);
    CHECK(determinant(psi_s_matrix(c, d)) == expected);
    Configuration cd(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 3; ++a) cd(i, a) = to_double(c(i, a));
    CHECK(eval_psi_s(cd, d) == doctest::Approx(to_double(expected)).epsilon(1e-12));
  }
}

TEST_CASE("degenerate selections are linearly independent") {
  const auto sels = shell_selections(3, 3);
  std::mt19937_64 rng(7);
  const int points = 40;
  Eigen::MatrixXd values(points, static_cast<Eigen::Index>(sels.size()));
  for (int r = 0; r < points; ++r) {
    const auto c = random_config(rng, 3, 3);
    for (std::size_t s = 0; s < sels.size(); ++s) {
      WavefunctionDescriptor d;
      d.params = SystemParams::natural(3, 3);
      d.shell_selection = sels[s];
      d.normalized = false;
      values(r, static_cast<Eigen::Index>(s)) = eval_fermi_ground_d(c, d);
    }
  }
  const Eigen::MatrixXd gram = values.transpose() * values;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  CHECK(es.eigenvalues().minCoeff() > 1e-6 * es.eigenvalues().maxCoeff());
}

TEST_CASE("descriptor validation") {
  WavefunctionDescriptor d;
  d.params = SystemParams::natural(3, 3);
  d.validate();
  CHECK(d.shell_selection == std::vector<int>{1, 2});

  WavefunctionDescriptor wrong_size;
  wrong_size.params = SystemParams::natural(3, 3);
  wrong_size.shell_selection = {1};
  CHECK_THROWS_AS(wrong_size.validate(), std::invalid_argument);

  WavefunctionDescriptor duplicate;
  duplicate.params = SystemParams::natural(3, 3);
  duplicate.shell_selection = {2, 2};
  CHECK_THROWS_AS(duplicate.validate(), std::invalid_argument);

  WavefunctionDescriptor out_of_range;
  out_of_range.params = SystemParams::natural(3, 3);
  out_of_range.shell_selection = {1, 4};
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);

  WavefunctionDescriptor excited;
  excited.params = SystemParams::natural(3, 2);
  excited.excitation = 1;
  CHECK_THROWS_AS(excited.validate(), std::invalid_argument);

  WavefunctionDescriptor bose_d;
  bose_d.statistics = Statistics::Bose;
  bose_d.params = SystemParams::natural(3, 2);
  CHECK_NOTHROW(bose_d.validate());
}

TEST_CASE("eigenfunction energies come from the spectrum") {
  WavefunctionDescriptor d;
  d.params = SystemParams::natural(4, 2);
  d.normalized = false;
  CHECK(Eigenfunction(d).energy() == doctest::Approx(14.0));
  WavefunctionDescriptor f;
  f.params = SystemParams::natural(3);
  f.excitation = 2;
  f.normalized = false;
  CHECK(Eigenfunction(f).energy() == doctest::Approx(energy_1d_fermi(2, f.params).energy));
}

TEST_CASE("log domain survives large N") {
  const auto p = SystemParams::natural(60);
  std::mt19937_64 rng(8);
  const auto c = random_config(rng, 60);
  const auto v = eval_fermi_ground_1d_log(c, p, false);
  CHECK(v.sign != 0);
  CHECK(std::isfinite(v.log_abs));
  const auto b = eval_bose_ground_log(c, p);
  CHECK(std::isfinite(b.log_abs));
}

TEST_CASE("numerical constant normalizes a D-dimensional ground state") {
  WavefunctionDescriptor d;
  d.params = SystemParams::natural(3, 2);
  const Eigenfunction psi(d);
  CHECK(psi.constant() > 0.0);
  CHECK(psi.constant() == numerical_constant(psi.descriptor()));
  const auto est = oracle::mc_normalize([&](const Configuration& c) { return psi.log_eval(c); }, d.params, 200000, 99);
  CHECK(est.value == doctest::Approx(1.0).epsilon(0.03));
}
