#pragma once

// Exact questions about Laurent polynomials at points ω = exp(2πi·a/b):
// vanishing (cyclotomic divisibility), sign of real values (certified
// interval evaluation in x = ω + ω̄ = 2cos θ), and isolation of the real
// roots of the x-polynomial on [-2, 2].

#include <cstdint>
#include <vector>

#include "knotconc/detail/zpoly.hpp"

namespace knotconc::detail {

/// The n-th cyclotomic polynomial; cached, safe to call concurrently.
const ZPoly& cyclotomic(std::uint64_t n);

/// a(ω) == 0 for ω = exp(2πi·num/den), gcd(num, den) = 1.
bool vanishes_at(const IntLaurent& a, std::int64_t num, std::int64_t den);

/// For a symmetric Laurent polynomial a (a(t) = a(1/t)), the integer
/// polynomial P with a(e^{iθ}) = P(2cos θ).
ZPoly circle_polynomial(const IntLaurent& a);

/// Sign of P(2cos(2π·num/den)); P must not vanish there (throws
/// InternalError if certification fails at the precision cap).
int certified_sign(const ZPoly& P, std::int64_t num, std::int64_t den);

/// An isolated real root: exactly lo when exact, else strictly inside
/// (lo, hi) with P(lo)·P(hi) < 0.
struct RealRoot {
  Rational lo, hi;
  bool exact = false;
};

/// Root isolation for polynomials with rational coefficients, via a Sturm
/// chain on the square-free part.
class RootIsolator {
 public:
  explicit RootIsolator(const ZPoly& P);

  /// Distinct roots in [-2, 2), ordered by decreasing x (increasing θ).
  /// x = 2 is left out: it is the point ω = 1.
  std::vector<RealRoot> roots_on_circle() const;

  /// Halve the isolating interval of a non-exact root.
  void refine(RealRoot& r) const;

  /// Number of the given roots lying strictly above x* = 2cos(2π·num/den),
  /// refining local copies as needed. x* must not be a root.
  std::size_t roots_above(std::vector<RealRoot> roots, std::int64_t num, std::int64_t den) const;

  const QPoly& squarefree() const { return sqf_; }

 private:
  int variations(const Rational& x) const;
  int sign_at(const Rational& x) const;
  void isolate(const Rational& l, const Rational& r, int vl, int vr, std::vector<RealRoot>& out) const;

  QPoly sqf_;
  std::vector<QPoly> chain_;
};

/// Approximate θ/(2π) of a root, for display only.
double approximate_turn(const RealRoot& r);

}  // namespace knotconc::detail
