#include "nbody/oracle.hpp"
#include "nbody/sympoly.hpp"

#include <doctest.h>

#include <random>

using namespace nbody;

namespace {

std::vector<Rational> rationals(std::initializer_list<Rational> v) { return v; }

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(random_small_rational(rng));
  return x;
}

}  // namespace

TEST_CASE("hermite values") {
  CHECK(hermite(0, 0.3) == 1.0);
  CHECK(hermite(1, 0.5) == 1.0);
  CHECK(hermite(3, 1.0) == doctest::Approx(-4.0));
  CHECK(hermite(4, Rational(1, 2)) == Rational(1));  // 16/16 - 48/4 + 12 = 1
  CHECK_THROWS_AS(hermite(-1, 0.0), std::invalid_argument);
}

TEST_CASE("hermite derivative relation") {
  for (int n = 1; n <= 12; ++n) {
    for (double x : {-1.3, 0.2, 0.9, 2.1}) {
      const double h = 1e-5;
      const double numeric = (hermite(n, x + h) - hermite(n, x - h)) / (2 * h);
      CHECK(numeric == doctest::Approx(2.0 * n * hermite(n - 1, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const SymmetricContext<Rational> ctx(rationals({1, 2, 3}));
  CHECK(ctx.sigma(0) == 1);
  CHECK(ctx.sigma(1) == 6);
  CHECK(ctx.sigma(2) == 11);
  CHECK(ctx.sigma(3) == 6);
  CHECK(ctx.sigma(4) == 0);
  CHECK(ctx.sigma(-1) == 0);
}

TEST_CASE("banded determinants are complete homogeneous polynomials") {
  const SymmetricContext<Rational> ctx(rationals({1, 2, 3}));
  CHECK(v_determinant(0, ctx) == 1);
  CHECK(v_determinant(1, ctx) == 6);
  CHECK(v_determinant(2, ctx) == 25);
  CHECK(v_determinant(-2, ctx) == 0);
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 5; ++n) {
    const auto x = random_point(rng, n);
    const SymmetricContext<Rational> c(x);
    const auto table = v_table(8, c);
    for (int i = 0; i <= 8; ++i) CHECK(table[static_cast<std::size_t>(i)] == oracle::complete_homogeneous_bruteforce(i, x));
  }
}

TEST_CASE("hyper vandermonde") {
  const SymmetricContext<Rational> ctx(rationals({1, 2}));
  CHECK(hyper_vandermonde(ctx, 3) == 7);
  CHECK(hyper_vandermonde(ctx, 1) == 1);
  CHECK(hyper_vandermonde(ctx, 0) == 0);
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 5; ++n) {
    const auto x = random_point(rng, n);
    const SymmetricContext<Rational> c(x);
    for (int gamma = 0; gamma <= 10; ++gamma) {
      const Rational closed = hyper_vandermonde(c, gamma);
      CHECK(closed == oracle::hyper_vandermonde_matrix(x, gamma));
      CHECK(closed == oracle::hyper_vandermonde_exchange_sum(x, gamma));
    }
  }
}

TEST_CASE("antisymmetrized power of the last relative coordinate") {
  CHECK(antisym_power_sum(SymmetricContext<Rational>(rationals({1, 0})), 1) == 2);
  CHECK(antisym_power_sum(SymmetricContext<Rational>(rationals({1, 2, 4})), 2) == Rational(27, 2));
  CHECK(antisym_power_sum(SymmetricContext<Rational>(rationals({Rational(1, 2), -1, 3, Rational(2, 3)})), 3) ==
        Rational(-5600, 243));
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto x = random_point(rng, n);
    const SymmetricContext<Rational> c(x);
    for (int l = 0; l <= n + 4; ++l) CHECK(antisym_power_sum(c, l) == oracle::antisym_power_direct(x, l));
    CHECK(antisym_power_sum(c, n - 2) == 0);
  }
}

TEST_CASE("double evaluation agrees with rationals") {
  const std::vector<Rational> x = rationals({Rational(1, 3), Rational(-2, 5), Rational(7, 4), 2});
  std::vector<double> xd;
  for (const auto& v : x) xd.push_back(to_double(v));
  const SymmetricContext<Rational> exact(x);
  const SymmetricContext<double> approx(xd);
  for (int l = 3; l <= 7; ++l)
    CHECK(antisym_power_sum(approx, l) == doctest::Approx(to_double(antisym_power_sum(exact, l))).epsilon(1e-12));
}

TEST_CASE("determinants") {
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(3, 3);
  m << 0, 2, 1, 3, 1, 4, 5, 9, 2;
  CHECK(determinant(m) == oracle::cofactor_determinant(m));
  CHECK(determinant(m) == 50);
  Eigen::MatrixXd d(2, 2);
  d << 1, 2, 3, 4;
  CHECK(determinant(d) == doctest::Approx(-2.0));
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(determinant(singular) == 0);
}

TEST_CASE("brute-force symmetric oracles") {
  const auto x = rationals({1, 2, 3});
  CHECK(oracle::elementary_symmetric_bruteforce(2, x) == 11);
  CHECK(oracle::complete_homogeneous_bruteforce(2, x) == 25);
}
