#include "knotconc/detail/unit_circle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace knotconc::detail {

namespace {

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 65536;

class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Interval {
  Mp lo, hi;
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

// x* = 2cos(2π·num/den) for the five denominators where it is an integer.
bool exact_circle_point(std::int64_t num, std::int64_t den, long* x) {
  std::int64_t a = ((num % den) + den) % den;
  a = std::min(a, den - a);
  if (a == 0) *x = 2;
  else if (2 * a == den) *x = -2;
  else if (3 * a == den) *x = -1;
  else if (4 * a == den) *x = 0;
  else if (6 * a == den) *x = 1;
  else return false;
  return true;
}

// Rigorous enclosure of 2cos(2π·num/den).
void enclose(std::int64_t num, std::int64_t den, Interval& x) {
  long exact = 0;
  if (exact_circle_point(num, den, &exact)) {
    mpfr_set_si(x.lo.get(), exact, MPFR_RNDN);
    mpfr_set_si(x.hi.get(), exact, MPFR_RNDN);
    return;
  }
  std::int64_t a = ((num % den) + den) % den;
  a = std::min(a, den - a);
  const mpfr_prec_t prec = mpfr_get_prec(x.lo.get());
  Mp th_lo(prec), th_hi(prec);
  mpfr_const_pi(th_lo.get(), MPFR_RNDD);
  mpfr_const_pi(th_hi.get(), MPFR_RNDU);
  mpfr_mul_si(th_lo.get(), th_lo.get(), 2 * a, MPFR_RNDD);
  mpfr_mul_si(th_hi.get(), th_hi.get(), 2 * a, MPFR_RNDU);
  mpfr_div_si(th_lo.get(), th_lo.get(), den, MPFR_RNDD);
  mpfr_div_si(th_hi.get(), th_hi.get(), den, MPFR_RNDU);
  // cos is decreasing on [0, π] and 0 < θ < π here.
  mpfr_cos(x.hi.get(), th_lo.get(), MPFR_RNDU);
  mpfr_cos(x.lo.get(), th_hi.get(), MPFR_RNDD);
  mpfr_mul_2ui(x.hi.get(), x.hi.get(), 1, MPFR_RNDU);
  mpfr_mul_2ui(x.lo.get(), x.lo.get(), 1, MPFR_RNDD);
}

void interval_mul(Interval& acc, const Interval& x) {
  const mpfr_prec_t prec = mpfr_get_prec(acc.lo.get());
  Mp d[4] = {Mp(prec), Mp(prec), Mp(prec), Mp(prec)};
  Mp u[4] = {Mp(prec), Mp(prec), Mp(prec), Mp(prec)};
  mpfr_srcptr a[2] = {acc.lo.get(), acc.hi.get()};
  mpfr_srcptr b[2] = {x.lo.get(), x.hi.get()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(d[2 * i + j].get(), a[i], b[j], MPFR_RNDD);
      mpfr_mul(u[2 * i + j].get(), a[i], b[j], MPFR_RNDU);
    }
  mpfr_min(acc.lo.get(), d[0].get(), d[1].get(), MPFR_RNDD);
  mpfr_min(acc.lo.get(), acc.lo.get(), d[2].get(), MPFR_RNDD);
  mpfr_min(acc.lo.get(), acc.lo.get(), d[3].get(), MPFR_RNDD);
  mpfr_max(acc.hi.get(), u[0].get(), u[1].get(), MPFR_RNDU);
  mpfr_max(acc.hi.get(), acc.hi.get(), u[2].get(), MPFR_RNDU);
  mpfr_max(acc.hi.get(), acc.hi.get(), u[3].get(), MPFR_RNDU);
}

void interval_horner(const ZPoly& P, const Interval& x, Interval& acc) {
  const mpfr_prec_t prec = mpfr_get_prec(acc.lo.get());
  mpfr_set_zero(acc.lo.get(), 1);
  mpfr_set_zero(acc.hi.get(), 1);
  Mp c(prec);
  for (std::size_t i = P.size(); i-- > 0;) {
    interval_mul(acc, x);
    mpfr_set_z(c.get(), P[i].backend().data(), MPFR_RNDD);
    mpfr_add(acc.lo.get(), acc.lo.get(), c.get(), MPFR_RNDD);
    mpfr_set_z(c.get(), P[i].backend().data(), MPFR_RNDU);
    mpfr_add(acc.hi.get(), acc.hi.get(), c.get(), MPFR_RNDU);
  }
}

}  // namespace

const ZPoly& cyclotomic(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, ZPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw InternalError("cyclotomic: n must be positive");
  ZPoly r(n + 1, Integer(0));
  r[0] = -1;
  r[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    ZPoly q;
    if (!exact_divide(r, cyclotomic(d), &q)) throw InternalError("cyclotomic: inexact division");
    r = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(r)).first->second;
}

bool vanishes_at(const IntLaurent& a, std::int64_t num, std::int64_t den) {
  if (a.is_zero()) return true;
  const std::int64_t g = std::gcd(num, den);
  const auto order = static_cast<std::uint64_t>(den / (g == 0 ? 1 : g));
  return rem_monic(to_zpoly(a), cyclotomic(order)).empty();
}

ZPoly circle_polynomial(const IntLaurent& a) {
  if (a.is_zero()) return {};
  if (a.low() != -a.high()) throw InternalError("circle_polynomial: input is not symmetric");
  for (std::int64_t e = 1; e <= a.high(); ++e)
    if (a.coeff(e) != a.coeff(-e)) throw InternalError("circle_polynomial: input is not symmetric");
  // t^j + t^-j = C_j(x): C_0 = 2, C_1 = x, C_{j+1} = x·C_j - C_{j-1}.
  ZPoly result{a.coeff(0)};
  ZPoly prev{Integer(2)}, cur{Integer(0), Integer(1)};
  for (std::int64_t j = 1; j <= a.high(); ++j) {
    result = add(result, scale(cur, a.coeff(j)));
    ZPoly next = sub(mul(ZPoly{Integer(0), Integer(1)}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  trim(result);
  return result;
}

int certified_sign(const ZPoly& P, std::int64_t num, std::int64_t den) {
  if (P.empty()) return 0;
  long exact = 0;
  if (exact_circle_point(num, den, &exact)) {
    Integer acc = 0;
    for (std::size_t i = P.size(); i-- > 0;) acc = acc * exact + P[i];
    return acc.sign();
  }
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Interval x(prec), acc(prec);
    enclose(num, den, x);
    interval_horner(P, x, acc);
    if (mpfr_sgn(acc.lo.get()) > 0) return 1;
    if (mpfr_sgn(acc.hi.get()) < 0) return -1;
  }
  throw InternalError("certified_sign: precision cap reached (value may be zero)");
}

RootIsolator::RootIsolator(const ZPoly& P) {
  if (degree(P) <= 0) {
    sqf_ = to_qpoly(P);
    chain_ = {sqf_};
    return;
  }
  const ZPoly g = gcd(P, derivative(P));
  ZPoly q;
  if (!exact_divide(primitive_part(P), g, &q)) throw InternalError("RootIsolator: inexact square-free part");
  sqf_ = to_qpoly(q);
  chain_ = {sqf_, qderivative(sqf_)};
  for (;;) {
    QPoly r = qrem(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int RootIsolator::sign_at(const Rational& x) const { return qevaluate(sqf_, x).sign(); }

int RootIsolator::variations(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& s : chain_) {
    const int v = qevaluate(s, x).sign();
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

void RootIsolator::isolate(const Rational& l, const Rational& r, int vl, int vr,
                           std::vector<RealRoot>& out) const {
  const int n = vl - vr;  // distinct roots in (l, r]
  if (n <= 0) return;
  if (n == 1) {
    if (sign_at(r) == 0) {
      out.push_back({r, r, true});
      return;
    }
    if (sign_at(l) != 0) {
      out.push_back({l, r, false});
      return;
    }
  }
  const Rational m = (l + r) / 2;
  const int vm = variations(m);
  isolate(l, m, vl, vm, out);
  isolate(m, r, vm, vr, out);
}

std::vector<RealRoot> RootIsolator::roots_on_circle() const {
  std::vector<RealRoot> out;
  if (degree(sqf_) <= 0) return out;
  const Rational lo(-2), hi(2);
  if (sign_at(lo) == 0) out.push_back({lo, lo, true});
  isolate(lo, hi, variations(lo), variations(hi), out);
  out.erase(std::remove_if(out.begin(), out.end(), [&](const RealRoot& r) { return r.exact && r.lo == hi; }),
            out.end());
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo > b.lo; });
  return out;
}

void RootIsolator::refine(RealRoot& r) const {
  if (r.exact) return;
  const Rational m = (r.lo + r.hi) / 2;
  const int s = sign_at(m);
  if (s == 0) {
    r.lo = r.hi = m;
    r.exact = true;
  } else if (s == sign_at(r.lo)) {
    r.lo = m;
  } else {
    r.hi = m;
  }
}

std::size_t RootIsolator::roots_above(std::vector<RealRoot> roots, std::int64_t num, std::int64_t den) const {
  std::size_t above = 0;
  for (auto& root : roots) {
    bool decided = false;
    for (mpfr_prec_t prec = kStartPrecision; !decided; prec = std::min(prec * 2, kMaxPrecision)) {
      Interval x(prec);
      enclose(num, den, x);
      // root > x* when even its lower end clears the enclosure, and so on.
      if (mpfr_cmp_q(x.hi.get(), root.lo.backend().data()) < 0 ||
          (!root.exact && mpfr_cmp_q(x.hi.get(), root.lo.backend().data()) <= 0)) {
        ++above;
        decided = true;
      } else if (mpfr_cmp_q(x.lo.get(), root.hi.backend().data()) > 0 ||
                 (!root.exact && mpfr_cmp_q(x.lo.get(), root.hi.backend().data()) >= 0)) {
        decided = true;
      } else {
        if (root.exact && prec == kMaxPrecision)
          throw InternalError("roots_above: point coincides with a root");
        refine(root);
        if (!root.exact && root.hi - root.lo < Rational(1, Integer(1) << 20000))
          throw InternalError("roots_above: point coincides with a root");
      }
    }
  }
  return above;
}

double approximate_turn(const RealRoot& r) {
  const double x = ((r.lo + r.hi) / 2).convert_to<double>();
  return std::acos(std::clamp(x / 2.0, -1.0, 1.0)) / (2.0 * std::numbers::pi);
}

}  // namespace knotconc::detail
