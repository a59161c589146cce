#include "knotconc/profile.hpp"

#include <cstdlib>

namespace knotconc {

std::optional<IntLaurent> KnotProfile::alexander() const {
  if (seifert) return substitute_power(knotconc::alexander(*seifert), signature_pullback);
  return declared_alexander;
}

int KnotProfile::signature(const RootOfUnity& omega) const {
  if (!seifert) throw MissingSeifert("knot '" + name + "' has no Seifert matrix");
  const RootOfUnity w = omega.pow(signature_pullback);
  if (w.is_one()) {
    if (omega.is_one()) throw OmegaIsOne("signature: omega = 1");
    return 0;
  }
  return levine_tristram(*seifert, w);
}

SignatureFunction KnotProfile::signature_function() const {
  if (!seifert) throw MissingSeifert("knot '" + name + "' has no Seifert matrix");
  const SeifertMatrix V = *seifert;
  const std::int64_t q = signature_pullback;
  return SignatureFunction(*alexander(), [V, q](const RootOfUnity& w) {
    const RootOfUnity wq = w.pow(q);
    return wq.is_one() ? 0 : levine_tristram(V, wq);
  });
}

std::optional<Cited<bool>> KnotProfile::topologically_slice_status() const {
  if (topologically_slice) return topologically_slice;
  const auto a = alexander();
  if (a && doteq(*a, IntLaurent(1))) return Cited<bool>{true, kFreedmanCitation};
  return std::nullopt;
}

void KnotProfile::validate() const {
  if (genus && genus->value < 0) throw ValidationError(name + ": genus must be nonnegative");
  if (slice_genus && genus && slice_genus->lower && *slice_genus->lower > genus->value)
    throw ValidationError(name + ": declared bounds violate g4 <= g");
  if (slice_genus && slice_genus->lower && slice_genus->upper && *slice_genus->lower > *slice_genus->upper)
    throw ValidationError(name + ": slice genus lower bound exceeds upper bound");
  if (tau && slice_genus && slice_genus->upper && std::abs(tau->value) > *slice_genus->upper)
    throw ValidationError(name + ": declared values violate |tau| <= g4");
  if (tau && genus && std::abs(tau->value) > genus->value)
    throw ValidationError(name + ": declared values violate |tau| <= g4 <= g");
}

}  // namespace knotconc
