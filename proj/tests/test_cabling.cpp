#include "doctest.h"
#include "knotconc/cabling.hpp"
#include "knotconc/catalog.hpp"
#include "support.hpp"

using namespace kt;

namespace {

const Catalog& bundled() {
  static const Catalog c = load_catalog(KNOTCONC_DEFAULT_CATALOG);
  return c;
}

const KnotProfile& knot(const char* name) { return bundled().knot(name); }

template <typename W>
std::vector<W> witnesses_of(const ObstructionReport& r) {
  std::vector<W> out;
  for (const auto& w : r.witnesses)
    if (const auto* x = std::get_if<W>(&w)) out.push_back(*x);
  return out;
}

KnotProfile from_matrix(const std::string& name, const IntMatrix& V) {
  KnotProfile K;
  K.name = name;
  K.seifert = SeifertMatrix(V);
  return K;
}

RootOfUnity random_omega(std::mt19937_64& rng) {
  const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 400);
  const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(b - 1));
  return {a, b};
}

}  // namespace

TEST_SUITE("cabling") {
  TEST_CASE("cable_alexander examples") {
    CHECK(cable_alexander(P("t - 1 + t^-1"), 1) == P("t - 1 + t^-1"));
    CHECK(cable_alexander(P("3*t - 7 + 3*t^-1"), 2) == P("3*t^2 - 7 + 3*t^-2"));
    CHECK(cable_alexander(IntLaurent(1), 5) == IntLaurent(1));
  }

  TEST_CASE("cable_signature examples") {
    const SignatureFunction s = knot("RH-trefoil").signature_function();
    const SignatureFunction s1 = cable_signature(s, 1);
    REQUIRE(s1.arcs().size() == s.arcs().size());
    for (std::size_t i = 0; i < s.arcs().size(); ++i) CHECK(s1.arcs()[i].value == s.arcs()[i].value);
    // ω³ = e^{6πi/7} lies past the jump at 1/6 of a turn.
    CHECK(cable_signature(s, 3).value_at({1, 7}) == -2);
    CHECK(s.value_at({3, 7}) == -2);
    CHECK(cable_signature(knot("figure-eight").signature_function(), 4).identically_zero());
  }

  TEST_CASE("finite_order_obstruction examples") {
    const auto r = finite_order_obstruction(knot("RH-trefoil"), 2);
    CHECK(r.verdict == Verdict::obstructed);
    CHECK(r.category == Category::topological);
    const auto w = witnesses_of<SignatureWitness>(r);
    REQUIRE(w.size() == 1);
    // First prime-denominator angle below the jump at 1/6 whose double is past it.
    CHECK(w[0].omega == RootOfUnity(1, 7));
    CHECK(w[0].first == 0);
    CHECK(w[0].second == -2);
    CHECK(levine_tristram(*knot("RH-trefoil").seifert, {1, 7}) == 0);
    CHECK(levine_tristram(*knot("RH-trefoil").seifert, {2, 7}) == -2);
    // 1/5 is past the jump already, so it cannot witness.
    CHECK(levine_tristram(*knot("RH-trefoil").seifert, {1, 5}) == -2);

    CHECK(finite_order_obstruction(knot("figure-eight"), 2).verdict == Verdict::no_obstruction_found);
    CHECK(finite_order_obstruction(knot("unknot"), 3).verdict == Verdict::no_obstruction_found);

    KnotProfile bare;
    bare.name = "bare";
    bare.declared_alexander = P("t - 1 + t^-1");
    CHECK_THROWS_AS(finite_order_obstruction(bare, 2), MissingSeifert);
  }

  TEST_CASE("fox_milnor_obstruction examples") {
    const KnotProfile& tw = knot("3-twist-negative-clasp");
    const auto r = fox_milnor_obstruction(tw, cable_profile(tw, 2), 4);
    CHECK(r.verdict == Verdict::obstructed_up_to_complexity);
    CHECK(r.k_max == 4);
    const auto f = witnesses_of<FactorWitness>(r);
    REQUIRE(f.size() == 4);
    for (int k = 1; k <= 4; ++k) {
      const auto& w = f[static_cast<std::size_t>(k - 1)];
      CHECK(w.k == k);
      CHECK(doteq(w.factor, substitute_power(P("3*t - 7 + 3*t^-1"), k)));
      CHECK(w.multiplicity % 2 == 1);
      CHECK(w.self_reciprocal);
      CHECK(w.irreducible);
    }

    const auto e = fox_milnor_obstruction(knot("figure-eight"), knot("unknot"), 2);
    CHECK(e.verdict == Verdict::consistent_up_to_bounds);
    const auto pass = witnesses_of<FoxMilnorPass>(e);
    REQUIRE(pass.size() == 1);
    CHECK(pass[0].k == 2);
    CHECK(doteq(pass[0].f, P("t^2 - t - 1")));

    const auto u = fox_milnor_obstruction(knot("unknot"), knot("unknot"), 1);
    CHECK(u.verdict == Verdict::consistent_up_to_bounds);
    REQUIRE(witnesses_of<FoxMilnorPass>(u).size() == 1);
    CHECK(witnesses_of<FoxMilnorPass>(u)[0].k == 1);
    CHECK(doteq(witnesses_of<FoxMilnorPass>(u)[0].f, IntLaurent(1)));

    KnotProfile none;
    none.name = "none";
    CHECK_THROWS_AS(fox_milnor_obstruction(none, knot("unknot"), 1), MissingAlexander);
  }

  TEST_CASE("tau cable rule") {
    const KnotProfile wd3 = tau_cable_rule(knot("whitehead-double-RH-trefoil"), 3);
    REQUIRE(wd3.tau);
    CHECK(wd3.tau->value == 3);
    CHECK_FALSE(wd3.tau->citation.empty());
    CHECK(doteq(*wd3.alexander(), IntLaurent(1)));

    KnotProfile z = knot("figure-eight");
    CHECK(tau_cable_rule(z, 7).tau->value == 0);
    CHECK(tau_cable_rule(knot("RH-trefoil"), 1).tau->value == 1);

    KnotProfile none;
    none.name = "none";
    CHECK_THROWS_AS(tau_cable_rule(none, 2), MissingTau);

    CHECK(tau_rules().size() == 3);
    CHECK(tau_connected_sum(knot("RH-trefoil"), knot("RH-trefoil"))->value == 2);
    CHECK(tau_mirror(knot("RH-trefoil"))->value == -1);
    CHECK_FALSE(tau_connected_sum(knot("RH-trefoil"), knot("3-twist-negative-clasp")));
  }

  TEST_CASE("verdict examples") {
    const KnotProfile& wd = knot("whitehead-double-RH-trefoil");
    const auto a = rational_concordance_verdict(wd, tau_cable_rule(wd, 2));
    CHECK(a.verdict == Verdict::obstructed);
    CHECK(a.category == Category::smooth);
    const auto t = witnesses_of<TauWitness>(a);
    REQUIRE(t.size() == 1);
    CHECK(t[0].tau0 == 1);
    CHECK(t[0].tau1 == 2);

    const KnotProfile& tr = knot("RH-trefoil");
    const auto b = rational_concordance_verdict(tr, tau_cable_rule(tr, 3));
    CHECK(b.verdict == Verdict::obstructed);
    CHECK(b.category == Category::topological);
    CHECK(witnesses_of<SignatureWitness>(b).size() == 1);

    CHECK(rational_concordance_verdict(knot("unknot"), knot("unknot")).verdict == Verdict::no_obstruction_found);
  }

  TEST_CASE("tau with a caveat is shown but not used") {
    KnotProfile wd = knot("whitehead-double-RH-trefoil");
    KnotProfile other = tau_cable_rule(wd, 2);
    other.tau_caveat = "hypothesis not established";
    const auto r = rational_concordance_verdict(wd, other);
    CHECK(witnesses_of<TauWitness>(r).empty());
    CHECK(r.verdict != Verdict::obstructed);
  }

  TEST_CASE("property: pullback identity over 100 angles") {
    std::mt19937_64 rng(kSeed + 20);
    const std::vector<const char*> names = {"RH-trefoil", "figure-eight", "3-twist-negative-clasp", "T(2,5)"};
    int checked = 0;
    while (checked < 100) {
      const KnotProfile& K = knot(names[static_cast<std::size_t>(checked) % names.size()]);
      const SignatureFunction s = K.signature_function();
      const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 4);
      const SignatureFunction c = cable_signature(s, p);
      const RootOfUnity w = random_omega(rng);
      if (w.pow(p).is_one() || s.is_jump(w.pow(p))) {
        CHECK(c.is_jump(w) == !w.pow(p).is_one());
        continue;
      }
      CHECK(c.value_at(w) == s.value_at(w.pow(p)));
      CHECK(cable_profile(K, p).signature(w) == levine_tristram(*K.seifert, w.pow(p)));
      ++checked;
    }
  }

  TEST_CASE("property: cable_alexander composes") {
    std::mt19937_64 rng(kSeed + 21);
    for (int n = 0; n < 100; ++n) {
      const IntLaurent d = random_poly(rng, 6, 9).shifted(static_cast<std::int64_t>(rng() % 5) - 2);
      const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 5), q = 1 + static_cast<std::int64_t>(rng() % 5);
      CHECK(cable_alexander(cable_alexander(d, p), q) == cable_alexander(d, p * q));
    }
  }

  TEST_CASE("property: signature witnesses avoid jumps") {
    std::mt19937_64 rng(kSeed + 22);
    std::vector<KnotProfile> knots = {knot("RH-trefoil"), knot("T(2,5)"), knot("3-twist-negative-clasp")};
    for (int g = 1; g <= 2; ++g)
      for (int k = 0; k < 4; ++k) knots.push_back(from_matrix("random", random_seifert(rng, g, 3)));
    int found = 0;
    for (const auto& K : knots)
      for (std::int64_t p = 2; p <= 5; ++p) {
        const auto r = finite_order_obstruction(K, p, 97);
        const SignatureFunction s = K.signature_function();
        for (const auto& w : witnesses_of<SignatureWitness>(r)) {
          ++found;
          CHECK_FALSE(s.is_jump(w.omega));
          CHECK_FALSE(s.is_jump(w.omega.pow(p)));
          CHECK_FALSE(cable_signature(s, p).is_jump(w.omega));
          CHECK(w.first == 0);
          CHECK(w.second != 0);
          CHECK(levine_tristram(*K.seifert, w.omega) == w.first);
          CHECK(levine_tristram(*K.seifert, w.omega.pow(p)) == w.second);
        }
      }
    CHECK(found >= 5);
  }

  TEST_CASE("property: a knot pairs with itself at k = 1") {
    std::mt19937_64 rng(kSeed + 23);
    for (int n = 0; n < 20; ++n) {
      const KnotProfile K = from_matrix("random", random_seifert(rng, 1 + n % 3, 3));
      const auto r = fox_milnor_obstruction(K, K, 3);
      CHECK(r.verdict == Verdict::consistent_up_to_bounds);
      const auto pass = witnesses_of<FoxMilnorPass>(r);
      REQUIRE(pass.size() == 1);
      CHECK(pass[0].k == 1);
      // f = delta is one valid witness; any f with f(t)f(1/t) = delta^2 is another.
      const IntLaurent d = *K.alexander();
      CHECK(doteq(pass[0].f * reciprocal(pass[0].f), d * d));
      if (is_irreducible(d)) CHECK(doteq(pass[0].f, d));
    }
  }

  TEST_CASE("property: verdicts are symmetric in argument order") {
    std::vector<KnotProfile> knots;
    for (const auto& e : bundled().entries())
      if (e.kind == EntryKind::knot) knots.push_back(e.profile);
    knots.push_back(tau_cable_rule(knot("whitehead-double-RH-trefoil"), 2));
    knots.push_back(tau_cable_rule(knot("RH-trefoil"), 2));
    knots.push_back(cable_profile(knot("3-twist-negative-clasp"), 3));
    const SearchOptions opts{3, 53};
    for (std::size_t i = 0; i < knots.size(); ++i)
      for (std::size_t j = i; j < knots.size(); ++j) {
        const auto a = rational_concordance_verdict(knots[i], knots[j], opts);
        const auto b = rational_concordance_verdict(knots[j], knots[i], opts);
        CHECK(a.verdict == b.verdict);
        CHECK(a.category == b.category);
        CHECK(a.witnesses.size() == b.witnesses.size());
        if (a.verdict == Verdict::obstructed) CHECK_FALSE(a.witnesses.empty());
      }
  }
}
