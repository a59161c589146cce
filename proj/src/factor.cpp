#include "knotconc/factor.hpp"

#include <algorithm>

#include "knotconc/detail/zpoly.hpp"

namespace knotconc {

namespace {

using detail::degree;
using detail::Fp;
using detail::FpPoly;
using detail::trim;
using detail::ZPoly;

constexpr int kPrimesToTry = 8;
constexpr std::uint64_t kPrimeLimit = 20000;

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ZPoly reduce_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], m);
  trim(r);
  return r;
}

ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = mod_floor(a[i], m);
    if (r[i] > half) r[i] -= m;
  }
  trim(r);
  return r;
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(c);
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw InternalError("inverse_mod: not invertible");
  return mod_floor(s0, m);
}

// Division by a monic b with coefficients taken mod m.
void divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly* q, ZPoly* r) {
  ZPoly rem = reduce_mod(a, m);
  ZPoly quo(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Integer(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    const Integer c = rem.back();
    const std::size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = mod_floor(rem[shift + j] - c * b[j], m);
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

// One quadratic Hensel step: from f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m),
// h monic, to the same relations mod m².
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  using detail::add;
  using detail::mul;
  using detail::sub;
  const Integer m2 = m * m;
  const ZPoly e = reduce_mod(sub(f, mul(g, h)), m2);
  ZPoly q, r;
  divmod_monic(mul(s, e), h, m2, &q, &r);
  ZPoly g2 = reduce_mod(add(add(g, mul(t, e)), mul(q, g)), m2);
  ZPoly h2 = reduce_mod(add(h, r), m2);
  const ZPoly b = reduce_mod(sub(add(mul(s, g2), mul(t, h2)), ZPoly{Integer(1)}), m2);
  ZPoly c, d;
  divmod_monic(mul(s, b), h2, m2, &c, &d);
  s = reduce_mod(sub(s, d), m2);
  t = reduce_mod(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Monic lifts mod M (a power of p) of the modular factors of f, where
// f ≡ lc(f) · prod(factors) (mod p).
std::vector<ZPoly> lift_tree(const ZPoly& f, const std::vector<FpPoly>& factors, const Fp& F,
                             const Integer& M) {
  if (factors.size() == 1) {
    const Integer inv = inverse_mod(f.back(), M);
    return {reduce_mod(detail::scale(f, inv), M)};
  }
  const std::size_t k = factors.size() / 2;
  const std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(k));
  const std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(k), factors.end());
  FpPoly g0{1}, h0{1};
  for (const auto& u : left) g0 = F.mul(g0, u);
  for (const auto& u : right) h0 = F.mul(h0, u);
  g0 = F.scale(g0, mod_floor(f.back(), Integer(F.p)).convert_to<std::uint64_t>());
  FpPoly s0, t0;
  F.bezout(g0, h0, &s0, &t0);
  ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  for (Integer m(F.p); m < M; m *= m) hensel_step(f, g, h, s, t, m);
  std::vector<ZPoly> out = lift_tree(reduce_mod(g, M), left, F, M);
  std::vector<ZPoly> rest = lift_tree(reduce_mod(h, M), right, F, M);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<bool> subset_degree_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (int d : degs)
    for (int s = n; s >= d; --s)
      if (reach[s - d]) reach[s] = true;
  return reach;
}

struct PrimeChoice {
  Fp field{0};
  std::vector<bool> allowed;  // degrees a proper factor could have
  bool irreducible = false;
};

PrimeChoice choose_prime(const ZPoly& f) {
  const int n = degree(f);
  PrimeChoice best;
  best.allowed.assign(static_cast<std::size_t>(n) + 1, true);
  std::size_t best_count = 0;
  int found = 0;
  for (std::uint64_t p = 3; p < kPrimeLimit && found < kPrimesToTry; p += 2) {
    if (!is_small_prime(p)) continue;
    const Fp F{p};
    if (f.back() % Integer(p) == 0) continue;
    const FpPoly fb = F.reduce(f);
    if (degree(F.gcd(fb, F.derivative(fb))) > 0) continue;
    ++found;
    const std::vector<int> degs = detail::factor_degrees_mod_p(F, fb);
    const auto sums = subset_degree_sums(degs, n);
    for (int d = 0; d <= n; ++d) best.allowed[d] = best.allowed[d] && sums[d];
    if (best.field.p == 0 || degs.size() < best_count) {
      best.field = F;
      best_count = degs.size();
    }
  }
  if (found == 0) throw InternalError("factor: no suitable prime below search limit");
  best.irreducible = best_count == 1 ||
                     std::none_of(best.allowed.begin() + 1, best.allowed.end() - 1, [](bool b) { return b; });
  return best;
}

// Irreducible factors of a primitive square-free f with positive leading
// coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 1) return {f};
  const PrimeChoice pc = choose_prime(f);
  if (pc.irreducible) return {f};
  const Fp& F = pc.field;
  const auto modular = detail::factor_squarefree_mod_p(F, F.reduce(f));

  // Coefficient bound for any factor of f scaled to leading coefficient lc(f).
  const Integer B = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(n)) *
                    (boost::multiprecision::sqrt(Integer(n + 1)) + 1) * detail::max_norm(f);
  const Integer bound = 2 * abs(f.back()) * B;
  Integer M(F.p);
  while (M <= bound) M *= M;

  std::vector<ZPoly> lifted = lift_tree(f, modular, F, M);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      int deg_sum = 0;
      for (auto i : idx) deg_sum += degree(lifted[i]);
      if (pc.allowed[static_cast<std::size_t>(deg_sum)]) {
        const Integer lc = rest.back();
        Integer c = lc;
        for (auto i : idx) c = mod_floor(c * lifted[i][0], M);
        if (c > M / 2) c -= M;
        if (c != 0 && (lc * rest[0]) % c == 0) {
          ZPoly g{lc};
          for (auto i : idx) g = reduce_mod(detail::mul(g, lifted[i]), M);
          g = detail::primitive_part(symmetric_mod(g, M));
          ZPoly q;
          if (detail::exact_divide(rest, g, &q)) {
            result.push_back(g);
            rest = std::move(q);
            for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
            found = true;
            break;
          }
        }
      }
      // next combination in lexicographic order
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) > 0) result.push_back(detail::primitive_part(rest));
  return result;
}

bool coefficient_less(const IntLaurent& a, const IntLaurent& b) {
  const auto ca = a.coefficients(), cb = b.coefficients();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

}  // namespace

IntLaurent Factorization::expand() const {
  IntLaurent r = IntLaurent::monomial(Integer(sign) * content, t_power);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
  return r;
}

int Factorization::degree_sum() const {
  int d = 0;
  for (const auto& f : factors) d += static_cast<int>(f.poly.span()) * f.multiplicity;
  return d;
}

Factorization factor(const IntLaurent& a) {
  if (a.is_zero()) throw ZeroPolynomial("factor: zero polynomial");
  Factorization out;
  out.sign = sign(a.leading());
  out.t_power = a.low();
  out.content = content(a);
  const ZPoly f = detail::to_zpoly(normal_form(a));
  if (degree(f) <= 0) return out;
  const auto parts = detail::squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (degree(parts[i]) <= 0) continue;
    for (const auto& q : factor_squarefree(parts[i]))
      out.factors.push_back({detail::to_laurent(q), static_cast<int>(i) + 1});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& x, const Factor& y) { return coefficient_less(x.poly, y.poly); });
  return out;
}

bool is_irreducible(const IntLaurent& a) {
  if (a.is_zero() || a.span() == 0) return false;
  const Factorization fz = factor(a);
  return fz.content == 1 && fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
}

bool is_self_reciprocal(const IntLaurent& q) { return normal_form(reciprocal(q)) == normal_form(q); }

}  // namespace knotconc
