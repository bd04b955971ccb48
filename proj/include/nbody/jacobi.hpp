#pragma once

// Jacobi coordinates: xi_i = (1/i) sum_{j<=i} x_j - x_{i+1} for i < N and
// xi_N = centroid. The transform acts on each axis independently.

#include "nbody/core.hpp"

#include <utility>

namespace nbody {

/// Row i-1 holds xi_i for every axis; the last row is the centroid.
template <typename Scalar>
using JacobiCoordinatesT = ConfigurationT<Scalar>;
using JacobiCoordinates = JacobiCoordinatesT<double>;

template <typename Derived>
JacobiCoordinatesT<typename Derived::Scalar> to_jacobi(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = c.rows();
  JacobiCoordinatesT<Scalar> xi(n, c.cols());
  for (Eigen::Index a = 0; a < c.cols(); ++a) {
    Scalar running(0);
    for (Eigen::Index i = 1; i < n; ++i) {
      running += c(i - 1, a);
      xi(i - 1, a) = running / Scalar(static_cast<int>(i)) - c(i, a);
    }
    running += c(n - 1, a);
    xi(n - 1, a) = running / Scalar(static_cast<int>(n));
  }
  return xi;
}

/// Inverse of to_jacobi by back-substitution of the partial sums
/// S_i = sum_{j<=i} x_j, starting from S_N = N xi_N. Exact in rationals.
template <typename Derived>
ConfigurationT<typename Derived::Scalar> from_jacobi(const Eigen::MatrixBase<Derived>& xi) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = xi.rows();
  ConfigurationT<Scalar> c(n, xi.cols());
  for (Eigen::Index a = 0; a < xi.cols(); ++a) {
    Scalar upper = Scalar(static_cast<int>(n)) * xi(n - 1, a);  // S_{i+1}
    for (Eigen::Index i = n - 1; i >= 1; --i) {
      // S_{i+1} = S_i (i+1)/i - xi_i
      const Scalar lower = (upper + xi(i - 1, a)) * Scalar(static_cast<int>(i)) /
                           Scalar(static_cast<int>(i + 1));
      c(i, a) = upper - lower;
      upper = lower;
    }
    c(0, a) = upper;
  }
  return c;
}

/// Both sides of sum_{i<j} (x_i - x_j)^2 = N sum_{i<N} (mu_i/m) xi_i^2 for a
/// single axis (column 0 of c).
template <typename Derived>
std::pair<typename Derived::Scalar, typename Derived::Scalar> pair_sum_identity_check(
    const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = c.rows();
  Scalar lhs(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Scalar d = c(i, 0) - c(j, 0);
      lhs += d * d;
    }
  const auto xi = to_jacobi(c.col(0));
  Scalar rhs(0);
  for (Eigen::Index i = 1; i < n; ++i) {
    const Scalar mu = Scalar(static_cast<int>(i)) / Scalar(static_cast<int>(i + 1));
    rhs += mu * xi(i - 1, 0) * xi(i - 1, 0);
  }
  rhs *= Scalar(static_cast<int>(n));
  return {lhs, rhs};
}

/// Sum over all pairs of squared distances |r_i - r_j|^2.
template <typename Derived>
typename Derived::Scalar pair_distance_sum(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar;
  Scalar s(0);
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = i + 1; j < c.rows(); ++j) s += (c.row(i) - c.row(j)).squaredNorm();
  return s;
}

}  // namespace nbody
