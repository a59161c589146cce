#include "knotconc/detail/zpoly.hpp"

#include <algorithm>

namespace knotconc::detail {

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    g = knotconc::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  ZPoly r = a;
  for (auto& c : r) c /= g;
  return r;
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (q) q->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  ZPoly quo(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Integer& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (top % lb != 0) return false;
    quo[i] = top / lb;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= quo[i] * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  trim(quo);
  if (q) *q = std::move(quo);
  return true;
}

ZPoly rem_monic(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const std::size_t nb = b.size();
  for (std::size_t i = r.size(); i >= nb; --i) {
    const Integer top = r[i - 1];
    if (top != 0)
      for (std::size_t j = 0; j < nb; ++j) r[i - nb + j] -= top * b[j];
  }
  trim(r);
  return r;
}

namespace {

// Pseudo-remainder lc(b)^(deg a - deg b + 1)·a mod b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const Integer& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const Integer top = r.back();
    const std::size_t shift = r.size() - b.size();
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= top * b[j];
    trim(r);
  }
  return r;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(r);
  }
  return primitive_part(x);
}

Integer max_norm(const ZPoly& a) {
  Integer m = 0;
  for (const auto& c : a) m = std::max(m, abs(c));
  return m;
}

ZPoly to_zpoly(const IntLaurent& a) {
  return ZPoly(a.coefficients().begin(), a.coefficients().end());
}

IntLaurent to_laurent(const ZPoly& a) { return IntLaurent::from_coefficients(0, a); }

std::vector<ZPoly> squarefree_decomposition(const ZPoly& a) {
  // Musser: with g = gcd(a, a'), w = a / g, peel off one multiplicity level
  // per round.
  std::vector<ZPoly> parts;
  if (degree(a) <= 0) return parts;
  ZPoly g = gcd(a, derivative(a));
  ZPoly w;
  if (!exact_divide(a, g, &w)) throw InternalError("squarefree: a/gcd not exact");
  w = primitive_part(w);
  while (degree(w) > 0) {
    ZPoly y = gcd(w, g);
    ZPoly z;
    if (!exact_divide(w, y, &z)) throw InternalError("squarefree: w/y not exact");
    parts.push_back(primitive_part(z));
    w = y;
    ZPoly g2;
    if (!exact_divide(g, y, &g2)) throw InternalError("squarefree: g/y not exact");
    g = primitive_part(g2);
  }
  while (!parts.empty() && degree(parts.back()) <= 0) parts.pop_back();
  return parts;
}

QPoly to_qpoly(const ZPoly& a) {
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly qderivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

QPoly qrem(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  const std::size_t nb = b.size();
  while (!r.empty() && r.size() >= nb) {
    const Rational f = r.back() / b.back();
    const std::size_t shift = r.size() - nb;
    for (std::size_t j = 0; j < nb; ++j) r[shift + j] -= f * b[j];
    r.pop_back();
    trim(r);
  }
  return r;
}

Rational qevaluate(const QPoly& a, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

}  // namespace knotconc::detail
