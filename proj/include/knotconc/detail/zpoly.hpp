#pragma once

// Dense univariate polynomials over Z, Q and Z/pZ used by the factoring and
// root-isolation code. Index i holds the coefficient of x^i; values are kept
// trimmed so the zero polynomial is the empty vector.

#include <cstdint>
#include <vector>

#include "knotconc/integer.hpp"
#include "knotconc/laurent.hpp"

namespace knotconc::detail {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

template <typename T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename T>
int degree(const std::vector<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& a);
Integer content(const ZPoly& a);
/// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& a);
/// a = q·b exactly over Z; returns false (q untouched) otherwise.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly* q = nullptr);
/// Remainder of a by a monic b.
ZPoly rem_monic(const ZPoly& a, const ZPoly& b);
/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
Integer max_norm(const ZPoly& a);

/// Shift a Laurent polynomial so its lowest exponent is zero.
ZPoly to_zpoly(const IntLaurent& a);
IntLaurent to_laurent(const ZPoly& a);

/// Square-free decomposition of a primitive polynomial with positive leading
/// coefficient: a = prod_i parts[i]^(i+1), each part primitive and square-free.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& a);

QPoly to_qpoly(const ZPoly& a);
QPoly qsub(const QPoly& a, const QPoly& b);
QPoly qderivative(const QPoly& a);
QPoly qrem(const QPoly& a, const QPoly& b);
Rational qevaluate(const QPoly& a, const Rational& x);

// ---- arithmetic over Z/pZ, p < 2^31 ----
using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  FpPoly reduce(const ZPoly& a) const;
  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, std::uint64_t c) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly derivative(const FpPoly& a) const;
  void divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const;
  FpPoly rem(const FpPoly& a, const FpPoly& b) const;
  FpPoly gcd(FpPoly a, FpPoly b) const;
  /// Bezout: s·a + t·b = 1 for coprime a, b.
  void bezout(const FpPoly& a, const FpPoly& b, FpPoly* s, FpPoly* t) const;
  FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const;
};

/// Irreducible monic factors of a square-free monic polynomial over Z/pZ
/// (p odd), via distinct-degree then equal-degree splitting. Factors are
/// sorted by degree then coefficients.
std::vector<FpPoly> factor_squarefree_mod_p(const Fp& field, const FpPoly& f);

/// Degrees of the irreducible factors (distinct-degree stage only).
std::vector<int> factor_degrees_mod_p(const Fp& field, const FpPoly& f);

}  // namespace knotconc::detail
