#pragma once

// Exact arithmetic used by the identity checks and shell counting. GMP backed,
// expression templates disabled so that generic code can use `auto` freely.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <random>
#include <type_traits>

namespace nbody {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
inline constexpr bool is_exact_v = !std::is_floating_point_v<Scalar>;

/// n! as a Scalar (exact for Rational).
template <typename Scalar>
Scalar factorial(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

/// Integer power by repeated multiplication; exact for Rational.
template <typename Scalar>
Scalar ipow(const Scalar& base, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Random rational p/q with |p| <= max_num, 1 <= q <= max_den.
template <typename Rng>
Rational random_small_rational(Rng& rng, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace nbody
