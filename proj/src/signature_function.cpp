#include <algorithm>
#include <numeric>

#include "knotconc/seifert.hpp"

namespace knotconc {

namespace {

constexpr std::int64_t kMaxSampleDenominator = std::int64_t{1} << 20;

// A symmetric Laurent polynomial with the same unit-circle roots.
IntLaurent symmetric_carrier(const IntLaurent& p) {
  const IntLaurent a = associate_normal_form(p);
  if (a.span() % 2 == 0) {
    const IntLaurent c = centered(a);
    if (is_self_conjugate(c)) return c;
  }
  return p * reciprocal(p);
}

}  // namespace

SignatureFunction::SignatureFunction(IntLaurent jump_polynomial, const Evaluator& evaluate)
    : jump_poly_(std::move(jump_polynomial)) {
  if (jump_poly_.is_zero()) throw ZeroPolynomial("signature function: zero jump polynomial");
  isolator_ = std::make_shared<const detail::RootIsolator>(detail::circle_polynomial(symmetric_carrier(jump_poly_)));
  roots_ = isolator_->roots_on_circle();
  const Rational display_width(1, Integer(1) << 48);
  for (auto& r : roots_)
    while (!r.exact && r.hi - r.lo > display_width) isolator_->refine(r);

  for (const auto& r : roots_) jumps_.push_back({r.lo, r.hi, r.exact, detail::approximate_turn(r)});

  const bool ends_at_pi = !roots_.empty() && roots_.back().exact && roots_.back().lo == -2;
  const std::size_t n_arcs = ends_at_pi ? roots_.size() : roots_.size() + 1;
  arcs_.resize(n_arcs);
  for (std::size_t k = 0; k < n_arcs; ++k) {
    arcs_[k].start_turn = k == 0 ? 0.0 : jumps_[k - 1].turn;
    arcs_[k].end_turn = k < jumps_.size() ? jumps_[k].turn : 0.5;
  }

  // Smallest-denominator sample in each arc of the upper half circle.
  std::vector<bool> have(n_arcs, false);
  std::size_t missing = n_arcs;
  for (std::int64_t b = 2; missing > 0; ++b) {
    if (b > kMaxSampleDenominator) throw InternalError("signature function: arc sampling did not terminate");
    for (std::int64_t a = 1; 2 * a <= b && missing > 0; ++a) {
      if (std::gcd(a, b) != 1 || detail::vanishes_at(jump_poly_, a, b)) continue;
      const std::size_t k = isolator_->roots_above(roots_, a, b);
      if (k >= n_arcs || have[k]) continue;
      have[k] = true;
      --missing;
      arcs_[k].sample = RootOfUnity(a, b);
    }
  }
  for (auto& arc : arcs_) arc.value = evaluate(arc.sample);
}

bool SignatureFunction::is_jump(const RootOfUnity& omega) const {
  return !omega.is_one() && detail::vanishes_at(jump_poly_, omega.num(), omega.den());
}

std::size_t SignatureFunction::locate(const RootOfUnity& omega) const {
  return isolator_->roots_above(roots_, omega.num(), omega.den());
}

int SignatureFunction::value_at(const RootOfUnity& omega) const {
  if (omega.is_one()) return 0;
  if (is_jump(omega)) throw SingularAtOmega("omega = " + omega.str() + " is a jump point of the signature function");
  return arcs_.at(locate(omega)).value;
}

bool SignatureFunction::identically_zero() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.value == 0; });
}

SignatureFunction signature_function(const SeifertMatrix& V) {
  return SignatureFunction(alexander(V), [V](const RootOfUnity& w) { return levine_tristram(V, w); });
}

}  // namespace knotconc
