#include "nbody/oracle.hpp"
#include "nbody/sympoly.hpp"

#include <bit>
#include <stdexcept>

namespace nbody::oracle {

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

void multisets(std::span<const Rational> x, std::size_t from, int remaining, const Rational& prod,
               Rational& acc) {
  if (remaining == 0) {
    acc += prod;
    return;
  }
  for (std::size_t j = from; j < x.size(); ++j) multisets(x, j, remaining - 1, prod * x[j], acc);
}

// prod_{i>j} (x_i - x_j) over the first m entries.
Rational leading_vandermonde(std::span<const Rational> x, std::size_t m) {
  Rational r(1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) r *= x[i] - x[j];
  return r;
}

template <typename LastFactor>
Rational exchange_sum(std::span<const Rational> x, LastFactor last) {
  const std::size_t n = x.size();
  Rational total(0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> y(x.begin(), x.end());
    std::swap(y[k], y[n - 1]);
    const Rational term = leading_vandermonde(y, n - 1) * last(std::span<const Rational>(y));
    if (k == n - 1) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace

Rational elementary_symmetric_bruteforce(int i, std::span<const Rational> x) {
  const std::size_t n = x.size();
  if (n > 24) throw std::invalid_argument("elementary_symmetric_bruteforce: too many variables");
  if (i < 0 || i > static_cast<int>(n)) return Rational(0);
  Rational total(0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != i) continue;
    Rational prod(1);
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1U << j)) prod *= x[j];
    total += prod;
  }
  return total;
}

Rational complete_homogeneous_bruteforce(int i, std::span<const Rational> x) {
  if (i < 0) return Rational(0);
  Rational acc(0);
  multisets(x, 0, i, Rational(1), acc);
  return acc;
}

Rational cofactor_determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("cofactor_determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    const Rational term = m(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

Rational hyper_vandermonde_matrix(std::span<const Rational> x, int gamma) {
  if (gamma < 0) throw std::invalid_argument("hyper_vandermonde_matrix: negative exponent");
  const auto n = static_cast<Eigen::Index>(x.size());
  RationalMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = ipow(x[static_cast<std::size_t>(c)], r == n - 1 ? gamma : static_cast<int>(r));
  return cofactor_determinant(m);
}

Rational hyper_vandermonde_exchange_sum(std::span<const Rational> x, int gamma) {
  if (gamma < 0) throw std::invalid_argument("hyper_vandermonde_exchange_sum: negative exponent");
  return exchange_sum(x, [gamma](std::span<const Rational> y) { return ipow(y.back(), gamma); });
}

Rational antisym_power_direct(std::span<const Rational> x, int l) {
  if (l < 0) throw std::invalid_argument("antisym_power_direct: negative power");
  return exchange_sum(x, [l](std::span<const Rational> y) {
    Rational mean(0);
    for (std::size_t j = 0; j + 1 < y.size(); ++j) mean += y[j];
    mean /= Rational(static_cast<int>(y.size() - 1));
    return ipow(mean - y.back(), l);
  });
}

}  // namespace nbody::oracle
