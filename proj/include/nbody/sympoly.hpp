#pragma once

// Polynomial building blocks evaluated at points, generic over double and
// Rational:
//   * physicists' Hermite polynomials H_n
//   * elementary symmetric polynomials sigma_i
//   * the banded sigma determinants V_i (equal to the complete homogeneous
//     symmetric polynomials h_i)
//   * the generalized ("hyper") Vandermonde determinant whose last power row
//     is raised to an arbitrary exponent
//   * the closed form of the antisymmetrized power of the last relative
//     Jacobi coordinate.

#include "nbody/rational.hpp"

#include <Eigen/LU>

#include <span>
#include <stdexcept>
#include <vector>

namespace nbody {

/// H_n(x) by H_{n+1} = 2x H_n - 2n H_{n-1}.
template <typename Scalar>
Scalar hermite(int n, const Scalar& x) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(2) * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * x * cur - Scalar(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Variables x_1..x_N together with sigma_0..sigma_N, built once from the
/// generating function prod_j (1 + x_j t).
template <typename Scalar>
class SymmetricContext {
 public:
  explicit SymmetricContext(std::vector<Scalar> variables) : vars_(std::move(variables)) {
    sigma_.assign(vars_.size() + 1, Scalar(0));
    sigma_[0] = Scalar(1);
    for (std::size_t j = 0; j < vars_.size(); ++j)
      for (std::size_t i = j + 1; i >= 1; --i) sigma_[i] += vars_[j] * sigma_[i - 1];
  }

  template <typename Derived>
  static SymmetricContext from_column(const Eigen::MatrixBase<Derived>& col) {
    std::vector<Scalar> v(static_cast<std::size_t>(col.size()));
    for (Eigen::Index i = 0; i < col.size(); ++i) v[static_cast<std::size_t>(i)] = col(i);
    return SymmetricContext(std::move(v));
  }

  int size() const { return static_cast<int>(vars_.size()); }
  std::span<const Scalar> variables() const { return vars_; }

  /// sigma_i; 1 at i = 0 and 0 outside 0..N.
  Scalar sigma(int i) const {
    if (i < 0 || i > size()) return Scalar(0);
    return sigma_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<Scalar> vars_;
  std::vector<Scalar> sigma_;
};

template <typename Scalar>
Scalar elementary_symmetric(int i, const SymmetricContext<Scalar>& ctx) {
  return ctx.sigma(i);
}

/// V_0..V_max via first-row cofactor expansion of the banded determinant,
/// V_i = sum_{j=1}^{i} (-1)^{j-1} sigma_j V_{i-j}. O(max * N).
template <typename Scalar>
std::vector<Scalar> v_table(int max_index, const SymmetricContext<Scalar>& ctx) {
  std::vector<Scalar> v(static_cast<std::size_t>(std::max(max_index, 0) + 1), Scalar(0));
  v[0] = Scalar(1);
  for (int i = 1; i <= max_index; ++i) {
    Scalar acc(0);
    for (int j = 1; j <= std::min(i, ctx.size()); ++j) {
      const Scalar term = ctx.sigma(j) * v[static_cast<std::size_t>(i - j)];
      if (j % 2 == 1) acc += term;
      else acc -= term;
    }
    v[static_cast<std::size_t>(i)] = acc;
  }
  return v;
}

/// V_i; zero for negative i.
template <typename Scalar>
Scalar v_determinant(int i, const SymmetricContext<Scalar>& ctx) {
  if (i < 0) return Scalar(0);
  return v_table(i, ctx)[static_cast<std::size_t>(i)];
}

inline int epsilon_parity(int k) {
  if (k < 0) throw std::invalid_argument("epsilon_parity: negative argument");
  return k % 2;
}

/// prod_{i>j} (x_i - x_j) over all pairs, i.e. the classic Vandermonde
/// determinant det[x_j^{r}]_{r=0..N-1}.
template <typename Scalar>
Scalar vandermonde_product(std::span<const Scalar> x) {
  Scalar p(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) p *= x[i] - x[j];
  return p;
}

/// det of the N x N matrix with rows x^0, ..., x^{N-2}, x^gamma, by the
/// factorization V_{gamma-N+1} * prod_{i>j}(x_i - x_j); zero for
/// gamma < N-1.
template <typename Scalar>
Scalar hyper_vandermonde(const SymmetricContext<Scalar>& ctx, int gamma) {
  const int n = ctx.size();
  if (n < 2) throw std::invalid_argument("hyper_vandermonde: need N >= 2");
  if (gamma < 0) throw std::invalid_argument("hyper_vandermonde: negative exponent");
  if (gamma < n - 1) return Scalar(0);
  return v_determinant(gamma - n + 1, ctx) * vandermonde_product(ctx.variables());
}

/// sum_{k=1}^{N} a(P_kN) P_kN [ prod_{i>j<N}(x_i - x_j) * xi_{N-1}^l ], with
/// xi_{N-1} = (x_1 + ... + x_{N-1})/(N-1) - x_N, from its closed form
///   sum_i  l! (-N)^{l-i} / ((N-1)^l i! (l-i)!) sigma_1^i V_{l-N+1-i}
/// times the full Vandermonde product. Zero for l < N-1.
template <typename Scalar>
Scalar antisym_power_sum(const SymmetricContext<Scalar>& ctx, int l) {
  const int n = ctx.size();
  if (n < 2) throw std::invalid_argument("antisym_power_sum: need N >= 2");
  if (l < 0) throw std::invalid_argument("antisym_power_sum: negative power");
  if (l < n - 1) return Scalar(0);
  const int top = l - n + 1;
  const auto v = v_table(top, ctx);
  const Scalar s1 = ctx.sigma(1);
  const Scalar minus_n(-n);
  Scalar binom(1);  // C(l, i)
  Scalar s1_pow(1);
  Scalar acc(0);
  for (int i = 0; i <= top; ++i) {
    acc += binom * ipow(minus_n, l - i) * s1_pow * v[static_cast<std::size_t>(top - i)];
    binom = binom * Scalar(l - i) / Scalar(i + 1);
    s1_pow *= s1;
  }
  acc /= ipow(Scalar(n - 1), l);
  return acc * vandermonde_product(ctx.variables());
}

/// Determinant of a square matrix: partial-pivot LU for floating point,
/// fraction-free (Bareiss) elimination for exact scalars.
template <typename Scalar>
Scalar determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if constexpr (!is_exact_v<Scalar>) {
    return m.partialPivLu().determinant();
  } else {
    Scalar sign(1);
    Scalar prev(1);
    for (Eigen::Index k = 0; k < n - 1; ++k) {
      if (m(k, k) == 0) {
        Eigen::Index swap = k + 1;
        while (swap < n && m(swap, k) == 0) ++swap;
        if (swap == n) return Scalar(0);
        m.row(k).swap(m.row(swap));
        sign = -sign;
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        m(i, k) = Scalar(0);
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }
}

}  // namespace nbody
