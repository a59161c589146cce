#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace knotconc {

// Expression templates are off so the types behave as plain values inside
// Eigen expressions and std containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

inline Integer exact_div(const Integer& a, const Integer& b) { return a / b; }
inline bool is_zero(const Integer& a) { return a.is_zero(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a.sign(); }
inline int sign(const Rational& a) { return a.sign(); }

// Floor division and non-negative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

bool is_perfect_square(const Integer& a, Integer* root = nullptr);

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace knotconc
