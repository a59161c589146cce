#include "knotconc/cabling.hpp"

#include <cstdlib>

namespace knotconc {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const char* kHeddenCable =
    "Hedden, On knot Floer homology and cabling II, Int. Math. Res. Not. IMRN 2009, Theorem 1.2";
const char* kOzsvathSzabo =
    "Ozsvath-Szabo, Knot Floer homology and the four-ball genus, Geom. Topol. 7 (2003)";

std::string tau_cable_hypothesis_status(const KnotProfile& K) {
  if (!K.genus) return "hypothesis tau(K) = g(K) not checked: genus not declared";
  if (K.tau->value != K.genus->value)
    return "hypothesis tau(K) = g(K) fails (tau " + std::to_string(K.tau->value) + ", g " +
           std::to_string(K.genus->value) + ")";
  return {};
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::obstructed: return "obstructed";
    case Verdict::obstructed_up_to_complexity: return "obstructed-up-to-complexity";
    case Verdict::consistent_up_to_bounds: return "consistent-up-to-bounds";
    case Verdict::no_obstruction_found: return "no-obstruction-found";
  }
  return "?";
}

const char* to_string(Category c) { return c == Category::smooth ? "smooth" : "topological"; }

IntLaurent cable_alexander(const IntLaurent& delta, std::int64_t p) { return substitute_power(delta, p); }

SignatureFunction cable_signature(const SignatureFunction& sigma, std::int64_t p) {
  if (p < 1) throw ValidationError("cable_signature: p must be positive");
  return SignatureFunction(substitute_power(sigma.jump_polynomial(), p),
                           [sigma, p](const RootOfUnity& w) { return sigma.value_at(w.pow(p)); });
}

KnotProfile cable_profile(const KnotProfile& K, std::int64_t p) {
  if (p < 1) throw ValidationError("cable: p must be positive");
  if (p == 1) return K;
  KnotProfile c;
  c.name = K.name + "(" + std::to_string(p) + ",1)";
  c.seifert = K.seifert;
  c.signature_pullback = K.signature_pullback * p;
  if (!K.seifert && K.declared_alexander) c.declared_alexander = substitute_power(*K.declared_alexander, p);
  if (K.power_irreducible_citation) c.power_irreducible_citation = K.power_irreducible_citation;
  return c;
}

ObstructionReport finite_order_obstruction(const KnotProfile& K, std::int64_t p, std::int64_t bound) {
  if (!K.seifert) throw MissingSeifert("finite-order obstruction needs a Seifert matrix for '" + K.name + "'");
  if (p < 2) throw ValidationError("finite-order obstruction: p must be at least 2");
  ObstructionReport rep;
  rep.p = p;
  rep.angle_denominator_bound = bound;
  const SignatureFunction sigma = K.signature_function();
  for (std::int64_t b = 2; b <= bound; ++b) {
    if (!is_prime(b)) continue;
    for (std::int64_t a = 1; a < b; ++a) {
      const RootOfUnity w(a, b);
      const RootOfUnity wp = w.pow(p);
      if (sigma.is_jump(w) || sigma.is_jump(wp)) continue;
      if (sigma.value_at(w) != 0 || sigma.value_at(wp) == 0) continue;
      // Re-evaluate both values directly from the Seifert form.
      const int s0 = K.signature(w);
      const int s1 = wp.is_one() ? 0 : K.signature(wp);
      if (s0 != 0 || s1 == 0) throw InternalError("finite-order witness failed re-verification at " + w.str());
      rep.verdict = Verdict::obstructed;
      rep.category = Category::topological;
      rep.witnesses.push_back(SignatureWitness{w, s0, s1, "sigma_K(omega)", "sigma_K(omega^" + std::to_string(p) + ")"});
      rep.notes.push_back("sigma of the (" + std::to_string(p) + ",1)-cable at omega equals sigma_K(omega^" +
                          std::to_string(p) + ")");
      return rep;
    }
  }
  rep.verdict = Verdict::no_obstruction_found;
  return rep;
}

ObstructionReport fox_milnor_obstruction(const KnotProfile& K0, const KnotProfile& K1, int k_max) {
  const auto d0 = K0.alexander();
  const auto d1 = K1.alexander();
  if (!d0) throw MissingAlexander("no Alexander polynomial for '" + K0.name + "'");
  if (!d1) throw MissingAlexander("no Alexander polynomial for '" + K1.name + "'");
  if (k_max < 1) throw ValidationError("k-max must be positive");
  ObstructionReport rep;
  rep.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    const IntLaurent prod = substitute_power(*d0, k) * substitute_power(*d1, k);
    const FoxMilnorResult r = fox_milnor_pairing(prod);
    if (r.paired) {
      rep.verdict = Verdict::consistent_up_to_bounds;
      rep.witnesses.clear();
      rep.witnesses.push_back(FoxMilnorPass{k, r.witness});
      return rep;
    }
    const Factor& v = *r.violating;
    rep.witnesses.push_back(FactorWitness{k, v.poly, v.multiplicity, r.violating_self_reciprocal, v.poly.span() > 0});
  }
  rep.verdict = Verdict::obstructed_up_to_complexity;
  rep.category = Category::topological;
  rep.notes.push_back("rules out rational concordance of every complexity k <= " + std::to_string(k_max));
  for (const KnotProfile* K : {&K0, &K1})
    if (K->power_irreducible_citation)
      rep.notes.push_back("cited assumption for all k: delta_" + K->name + "(t^k) irreducible for every k (" +
                          *K->power_irreducible_citation + ")");
  return rep;
}

KnotProfile tau_cable_rule(const KnotProfile& K, std::int64_t p) {
  if (!K.tau) throw MissingTau("no declared tau for '" + K.name + "'");
  if (p == 1) return K;
  KnotProfile c = cable_profile(K, p);
  c.tau = Cited<int>{static_cast<int>(p * K.tau->value),
                     "cable rule tau(K(p,1)) = p tau(K), " + std::string(kHeddenCable) + "; base value: " +
                         K.tau->citation};
  const std::string status = tau_cable_hypothesis_status(K);
  if (!status.empty()) c.tau_caveat = status;
  else if (K.tau_caveat) c.tau_caveat = K.tau_caveat;
  return c;
}

const std::vector<TauRule>& tau_rules() {
  static const std::vector<TauRule> rules = {
      {"cable", "tau(K(p,1)) = p tau(K) when tau(K) = g(K)", kHeddenCable},
      {"connected-sum", "tau(K # J) = tau(K) + tau(J)", kOzsvathSzabo},
      {"mirror", "tau(-K) = -tau(K)", kOzsvathSzabo},
  };
  return rules;
}

std::optional<Cited<int>> tau_connected_sum(const KnotProfile& K, const KnotProfile& J) {
  if (!K.tau || !J.tau) return std::nullopt;
  return Cited<int>{K.tau->value + J.tau->value, std::string("additivity, ") + kOzsvathSzabo};
}

std::optional<Cited<int>> tau_mirror(const KnotProfile& K) {
  if (!K.tau) return std::nullopt;
  return Cited<int>{-K.tau->value, std::string("mirror negation, ") + kOzsvathSzabo};
}

std::optional<SignatureWitness> signature_mismatch(const KnotProfile& K0, const KnotProfile& K1,
                                                   std::int64_t bound) {
  if (!K0.seifert || !K1.seifert) return std::nullopt;
  const SignatureFunction s0 = K0.signature_function();
  const SignatureFunction s1 = K1.signature_function();
  for (std::int64_t b = 2; b <= bound; ++b) {
    if (!is_prime(b)) continue;
    for (std::int64_t a = 1; a < b; ++a) {
      const RootOfUnity w(a, b);
      if (s0.is_jump(w) || s1.is_jump(w)) continue;
      if (s0.value_at(w) == s1.value_at(w)) continue;
      const int v0 = K0.signature(w), v1 = K1.signature(w);
      if (v0 == v1) throw InternalError("signature witness failed re-verification at " + w.str());
      return SignatureWitness{w, v0, v1, "sigma_" + K0.name + "(omega)", "sigma_" + K1.name + "(omega)"};
    }
  }
  return std::nullopt;
}

ObstructionReport rational_concordance_verdict(const KnotProfile& K0, const KnotProfile& K1,
                                               const SearchOptions& opt) {
  ObstructionReport rep;
  rep.k_max = opt.k_max;
  rep.angle_denominator_bound = opt.angle_denominator_bound;

  const auto sig = signature_mismatch(K0, K1, opt.angle_denominator_bound);
  if (!K0.seifert || !K1.seifert) rep.notes.push_back("signature evidence skipped: Seifert matrix missing");

  std::optional<TauWitness> tau;
  if (K0.tau && K1.tau) {
    if (K0.tau_caveat || K1.tau_caveat) {
      rep.notes.push_back("tau evidence skipped: " + (K0.tau_caveat ? *K0.tau_caveat : *K1.tau_caveat));
    } else if (K0.tau->value != K1.tau->value) {
      tau = TauWitness{K0.tau->value, K1.tau->value, K0.tau->citation, K1.tau->citation};
    }
  } else {
    rep.notes.push_back("tau evidence skipped: tau not declared for both knots");
  }

  std::optional<ObstructionReport> fm;
  if (K0.alexander() && K1.alexander()) fm = fox_milnor_obstruction(K0, K1, opt.k_max);

  if (sig) {
    rep.verdict = Verdict::obstructed;
    rep.category = Category::topological;
    rep.witnesses.push_back(*sig);
  }
  if (tau) {
    if (!sig) {
      rep.verdict = Verdict::obstructed;
      rep.category = Category::smooth;
    }
    rep.witnesses.push_back(*tau);
  }
  if (fm) {
    if (!sig && !tau && fm->verdict == Verdict::obstructed_up_to_complexity) {
      rep.verdict = Verdict::obstructed_up_to_complexity;
      rep.category = Category::topological;
    }
    for (auto& w : fm->witnesses) rep.witnesses.push_back(w);
    for (auto& n : fm->notes) rep.notes.push_back(n);
  }
  for (const KnotProfile* K : {&K0, &K1}) {
    const auto ts = K->topologically_slice_status();
    if (ts && ts->value) rep.notes.push_back(K->name + " is topologically slice (" + ts->citation + ")");
  }
  return rep;
}

}  // namespace knotconc
