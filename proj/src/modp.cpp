#include <algorithm>
#include <random>

#include "knotconc/detail/zpoly.hpp"

namespace knotconc::detail {

namespace {
void trim_fp(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
}  // namespace

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Fp::inv(std::uint64_t a) const {
  if (a % p == 0) throw InternalError("Fp::inv of zero");
  return pow(a, p - 2);
}

FpPoly Fp::reduce(const ZPoly& a) const {
  FpPoly r(a.size());
  const Integer P(p);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], P).convert_to<std::uint64_t>();
  trim_fp(r);
  return r;
}

FpPoly Fp::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim_fp(r);
  return r;
}

FpPoly Fp::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim_fp(r);
  return r;
}

FpPoly Fp::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim_fp(r);
  return r;
}

FpPoly Fp::scale(const FpPoly& a, std::uint64_t c) const {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
  trim_fp(r);
  return r;
}

FpPoly Fp::monic(const FpPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

FpPoly Fp::derivative(const FpPoly& a) const {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
  trim_fp(r);
  return r;
}

void Fp::divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const {
  if (b.empty()) throw InternalError("Fp::divmod by zero");
  FpPoly rem = a;
  FpPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t ib = inv(b.back());
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::uint64_t f = mul(rem.back(), ib);
    const std::size_t shift = rem.size() - b.size();
    quo[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = sub(rem[shift + j], mul(f, b[j]));
    trim_fp(rem);
  }
  trim_fp(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

FpPoly Fp::rem(const FpPoly& a, const FpPoly& b) const {
  FpPoly r;
  divmod(a, b, nullptr, &r);
  return r;
}

FpPoly Fp::gcd(FpPoly a, FpPoly b) const {
  while (!b.empty()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

void Fp::bezout(const FpPoly& a, const FpPoly& b, FpPoly* s, FpPoly* t) const {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    divmod(r0, r1, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = sub(s0, mul(q, s1));
    FpPoly t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InternalError("Fp::bezout: inputs not coprime");
  const std::uint64_t c = inv(r0[0]);
  *s = scale(s0, c);
  *t = scale(t0, c);
}

FpPoly Fp::powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const {
  FpPoly result{1};
  result = rem(result, m);
  FpPoly b = rem(base, m);
  const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (boost::multiprecision::bit_test(e, i)) result = rem(mul(result, b), m);
  }
  return result;
}

namespace {

struct DegreeBlock {
  int degree;
  FpPoly product;  // product of all irreducible factors of this degree
};

std::vector<DegreeBlock> distinct_degree(const Fp& F, const FpPoly& f_in) {
  std::vector<DegreeBlock> out;
  FpPoly f = F.monic(f_in);
  const FpPoly x{0, 1};
  FpPoly h = x;
  const Integer P(F.p);
  int d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = F.powmod(h, P, f);
    FpPoly g = F.gcd(f, F.sub(h, x));
    if (degree(g) > 0) {
      out.push_back({d, g});
      FpPoly q;
      F.divmod(f, g, &q, nullptr);
      f = F.monic(q);
      h = F.rem(h, f);
    }
  }
  if (degree(f) > 0) out.push_back({degree(f), f});
  return out;
}

void equal_degree(const Fp& F, const FpPoly& f, int d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  if (degree(f) == d) {
    out.push_back(F.monic(f));
    return;
  }
  const Integer e = (boost::multiprecision::pow(Integer(F.p), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = dist(rng);
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (degree(a) <= 0) continue;
    FpPoly g = F.gcd(f, a);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      FpPoly q;
      F.divmod(f, g, &q, nullptr);
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.monic(q), d, rng, out);
      return;
    }
    FpPoly b = F.sub(F.powmod(a, e, f), FpPoly{1});
    g = F.gcd(f, b);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      FpPoly q;
      F.divmod(f, g, &q, nullptr);
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpPoly> factor_squarefree_mod_p(const Fp& field, const FpPoly& f) {
  if (field.p == 2) throw InternalError("factor_squarefree_mod_p: p must be odd");
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eed'cafe'f00dULL + field.p);
  for (const auto& block : distinct_degree(field, f)) equal_degree(field, block.product, block.degree, rng, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<int> factor_degrees_mod_p(const Fp& field, const FpPoly& f) {
  std::vector<int> degs;
  for (const auto& block : distinct_degree(field, f))
    for (int i = 0; i < degree(block.product) / block.degree; ++i) degs.push_back(block.degree);
  return degs;
}

}  // namespace knotconc::detail
