#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotconc/error.hpp"
#include "knotconc/integer.hpp"

namespace knotconc {

/// Exact Laurent polynomial sum_e c_e t^e over Scalar (Integer or Rational).
///
/// Stored densely from the lowest exponent upward. The coefficient vector
/// never has a zero at either end, so low() and high() are the true extreme
/// exponents of a nonzero polynomial; the zero polynomial has no
/// coefficients.
template <typename Scalar>
class LaurentPoly {
 public:
  using scalar_type = Scalar;
  using exponent_type = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(const Scalar& c) : coeffs_{c} { trim(); }  // NOLINT: implicit
  LaurentPoly(int c) : LaurentPoly(Scalar(c)) {}         // NOLINT: implicit

  static LaurentPoly monomial(const Scalar& c, exponent_type e) {
    LaurentPoly p;
    if (c != 0) {
      p.low_ = e;
      p.coeffs_.push_back(c);
    }
    return p;
  }

  /// The indeterminate t.
  static LaurentPoly t() { return monomial(Scalar(1), 1); }

  static LaurentPoly from_coefficients(exponent_type low, std::vector<Scalar> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  exponent_type low() const { return low_; }
  exponent_type high() const { return low_ + static_cast<exponent_type>(coeffs_.size()) - 1; }
  /// high() - low(); zero for constants.
  exponent_type span() const { return is_zero() ? 0 : high() - low(); }
  const Scalar& leading() const { return coeffs_.back(); }
  const Scalar& trailing() const { return coeffs_.front(); }
  std::span<const Scalar> coefficients() const { return coeffs_; }

  Scalar coeff(exponent_type e) const {
    if (is_zero() || e < low() || e > high()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Multiplication by t^g.
  LaurentPoly shifted(exponent_type g) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += g;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = add(*this, o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = add(*this, o, -1); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, 1); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, -1); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coefficients(a.low_ + b.low_, std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

 private:
  static LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b, int sgn) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sgn > 0 ? b : -b;
    const exponent_type lo = std::min(a.low(), b.low());
    const exponent_type hi = std::max(a.high(), b.high());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[a.low_ - lo + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      if (sgn > 0)
        out[b.low_ - lo + i] += b.coeffs_[i];
      else
        out[b.low_ - lo + i] -= b.coeffs_[i];
    }
    return from_coefficients(lo, std::move(out));
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<Scalar>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
      low_ += static_cast<exponent_type>(first);
    }
  }

  exponent_type low_ = 0;
  std::vector<Scalar> coeffs_;
};

using IntLaurent = LaurentPoly<Integer>;
using RatLaurent = LaurentPoly<Rational>;

/// t -> t^k.
template <typename Scalar>
LaurentPoly<Scalar> substitute_power(const LaurentPoly<Scalar>& a, std::int64_t k) {
  if (k < 1) throw ValidationError("substitute_power: k must be positive");
  if (a.is_zero()) return a;
  const auto c = a.coefficients();
  std::vector<Scalar> out(static_cast<std::size_t>((c.size() - 1) * k + 1), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
  return LaurentPoly<Scalar>::from_coefficients(a.low() * k, std::move(out));
}

/// t -> t^{-1}.
template <typename Scalar>
LaurentPoly<Scalar> reciprocal(const LaurentPoly<Scalar>& a) {
  if (a.is_zero()) return a;
  const auto c = a.coefficients();
  std::vector<Scalar> out(c.rbegin(), c.rend());
  return LaurentPoly<Scalar>::from_coefficients(-a.high(), std::move(out));
}

template <typename Scalar>
bool is_self_conjugate(const LaurentPoly<Scalar>& a) {
  return reciprocal(a) == a;
}

template <typename Scalar>
Scalar evaluate(const LaurentPoly<Scalar>& a, const Scalar& x) {
  Scalar acc = 0;
  const auto c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  if (a.is_zero()) return acc;
  Scalar shift = 1;
  const auto lo = a.low();
  for (std::int64_t i = 0; i < (lo < 0 ? -lo : lo); ++i) shift *= x;
  return lo >= 0 ? Scalar(acc * shift) : Scalar(acc / shift);
}

Integer content(const IntLaurent& a);

/// Representative of the ±t^g class of a: lowest exponent 0, primitive,
/// positive leading coefficient. The zero polynomial maps to itself.
IntLaurent normal_form(const IntLaurent& a);

/// Same class representative without dividing out the content.
IntLaurent associate_normal_form(const IntLaurent& a);

/// a = ±t^g · b for some g.
bool doteq(const IntLaurent& a, const IntLaurent& b);

/// Exact quotient a / b in Z[t, t^{-1}]; throws InternalError when b does not
/// divide a.
IntLaurent exact_div(const IntLaurent& a, const IntLaurent& b);
inline bool is_zero(const IntLaurent& a) { return a.is_zero(); }

/// Symmetric representative t^{-c}·a, c the centre of the exponent range;
/// requires an even span.
IntLaurent centered(const IntLaurent& a);

/// Text form `3*t^1 - 7 + 3*t^-1`: terms by descending exponent, coefficient
/// omitted when its absolute value is one.
std::string format(const IntLaurent& a);
IntLaurent parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntLaurent& a);

}  // namespace knotconc

namespace Eigen {
template <>
struct NumTraits<knotconc::IntLaurent> : GenericNumTraits<knotconc::IntLaurent> {
  using Real = knotconc::IntLaurent;
  using NonInteger = knotconc::IntLaurent;
  using Nested = knotconc::IntLaurent;
  using Literal = knotconc::IntLaurent;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
};
}  // namespace Eigen
