#include "doctest.h"
#include "knotconc/catalog.hpp"
#include "knotconc/legendrian.hpp"
#include "support.hpp"

using namespace kt;

namespace {

const Catalog& bundled() {
  static const Catalog c = load_catalog(KNOTCONC_DEFAULT_CATALOG);
  return c;
}

struct Counts {
  int writhe, cusps, down_left, up_right, tb, rot;
};

void check_counts(const LegendrianInvariants& inv, const Counts& c) {
  REQUIRE(inv.writhe);
  CHECK(*inv.writhe == c.writhe);
  CHECK(*inv.cusps == c.cusps);
  CHECK(*inv.down_left_cusps == c.down_left);
  CHECK(*inv.up_right_cusps == c.up_right);
  CHECK(inv.tb == c.tb);
  CHECK(inv.rot == c.rot);
}

// Random planar front: a random walk on the strand count that closes up,
// oriented at its first (left cusp) event. May have several components.
FrontDiagram random_front(std::mt19937_64& rng, int max_events) {
  FrontDiagram d;
  d.name = "random";
  int n = 0;
  auto pick = [&](int hi) { return static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1)); };
  while (static_cast<int>(d.events.size()) < max_events || n > 0) {
    const bool closing = static_cast<int>(d.events.size()) >= max_events;
    const int r = pick(9);
    if (n == 0 || (!closing && r < 3 && n < 8)) {
      d.events.push_back({FrontEventKind::left_cusp, pick(n)});
      n += 2;
    } else if (closing || r < 6) {
      d.events.push_back({FrontEventKind::right_cusp, pick(n - 2)});
      n -= 2;
    } else {
      d.events.push_back({FrontEventKind::crossing, pick(n - 2)});
    }
    if (n == 0 && !closing && pick(3) == 0) break;
  }
  d.orient_event = 0;
  d.orient_up = rng() % 2 == 0;
  return d;
}

std::vector<FrontDiagram> random_knot_fronts(std::uint64_t seed, int want) {
  std::mt19937_64 rng(seed);
  std::vector<FrontDiagram> out;
  while (static_cast<int>(out.size()) < want) {
    FrontDiagram d = random_front(rng, 4 + static_cast<int>(rng() % 20));
    try {
      invariants(d);
      out.push_back(std::move(d));
    } catch (const MultiComponent&) {
    }
  }
  return out;
}

KnotProfile with_legendrian(const std::string& name, int genus, int tb, int rot) {
  KnotProfile K;
  K.name = name;
  K.genus = Cited<int>{genus, "test"};
  K.legendrian = LegendrianDatum{tb, rot, "test"};
  return K;
}

}  // namespace

TEST_SUITE("legendrian") {
  TEST_CASE("catalog fronts reproduce the figure counts") {
    check_counts(invariants(bundled().front("paper-pattern-P")), {3, 2, 0, 0, 2, 0});
    check_counts(invariants(bundled().front("legendrian-RH-trefoil")), {3, 6, 2, 1, 0, 1});
    check_counts(invariants(bundled().front("satellite-P-of-trefoil")), {12, 20, 5, 4, 2, 1});
    CHECK(invariants(bundled().front("legendrian-RH-trefoil-max")).tb == 1);
    CHECK(invariants(bundled().front("legendrian-RH-trefoil-max")).rot == 0);
    CHECK(invariants(bundled().front("legendrian-T25-max")).tb == 3);
    CHECK(winding_number(bundled().front("paper-pattern-P")) == 1);
    CHECK(winding_number(bundled().front("legendrian-RH-trefoil")) == 0);
  }

  TEST_CASE("parse and format round trip") {
    for (const char* name : {"paper-pattern-P", "legendrian-RH-trefoil", "satellite-P-of-trefoil"}) {
      const FrontDiagram& d = bundled().front(name);
      FrontDiagram back = parse_front(format_front(d), d.name);
      CHECK(back == d);
    }
    CHECK_THROWS_AS(parse_front("orient 0 up\nL x\n"), ParseError);
    CHECK_THROWS_AS(parse_front("L 0\nR 0\n"), ParseError);
    CHECK_THROWS_AS(parse_front("orient 0 up\nQ 1\n"), ParseError);
    CHECK_THROWS_AS(parse_front("orient 0 sideways\nL 0\nR 0\n"), ParseError);
    CHECK_THROWS_AS(parse_front("orient 0 up\nL -1\n"), ParseError);
  }

  TEST_CASE("invalid fronts") {
    CHECK_THROWS_AS(invariants(parse_front("orient 0 up\nL 0\n")), NonClosed);
    CHECK_THROWS_AS(invariants(parse_front("orient 0 up\nL 0\nR 0\nL 0\nR 0\n")), MultiComponent);
    CHECK_THROWS_AS(invariants(parse_front("orient 2 up\nL 0\nL 0\nX 1\nR 2\nR 0\n")), ValidationError);
    CHECK_THROWS_AS(invariants(parse_front("orient 9 up\nL 0\nR 0\n")), ValidationError);
    CHECK_THROWS_AS(invariants(parse_front("orient 0 up\nL 3\nR 0\n")), ValidationError);
    CHECK_THROWS_AS(invariants(parse_front("orient 0 up\nL 0\nX 1\nR 0\n")), ValidationError);
    CHECK_THROWS_AS(invariants(parse_front("orient 0 up\n")), ValidationError);
  }

  TEST_CASE("standard unknot") {
    const auto inv = invariants(parse_front("orient 0 up\nL 0\nR 0\n"));
    check_counts(inv, {0, 2, 0, 0, -1, 0});
  }

  TEST_CASE("stabilize examples") {
    const LegendrianInvariants a = stabilize({3, 0, {}, {}, {}, {}}, StabilizationSign::positive, 3);
    CHECK(a.tb == 0);
    CHECK(a.rot == 3);
    const LegendrianInvariants b = stabilize({5, -2, {}, {}, {}, {}}, StabilizationSign::negative, 0);
    CHECK(b.tb == 5);
    CHECK(b.rot == -2);
    const LegendrianInvariants c = stabilize({1, 0, {}, {}, {}, {}}, StabilizationSign::negative, 2);
    CHECK(c.tb == -1);
    CHECK(c.rot == -2);
    CHECK_THROWS_AS(stabilize({}, StabilizationSign::positive, -1), ValidationError);
  }

  TEST_CASE("satellite examples") {
    const PatternData P = bundled().pattern("paper-pattern-P");
    CHECK(P.winding == 1);
    CHECK(P.tb == 2);
    CHECK(P.rot == 0);
    CHECK(P.tilde == TildeClass::unknot);
    for (int g = 1; g <= 4; ++g) {
      const auto s = satellite_invariants(P, {0, 2 * g - 1, {}, {}, {}, {}});
      CHECK(s.tb == 2);
      CHECK(s.rot == 2 * g - 1);
      CHECK(s.tb + std::abs(s.rot) == 2 * g + 1);
      CHECK_FALSE(s.writhe);
    }
    const auto fig = satellite_invariants(P, invariants(bundled().front("legendrian-RH-trefoil")));
    CHECK(fig.tb == 2);
    CHECK(fig.rot == 1);
    PatternData cable{"cable", 3, -1, 2, TildeClass::other, ""};
    const auto c = satellite_invariants(cable, {1, -1, {}, {}, {}, {}});
    CHECK(c.tb == 9 * 1 - 1);
    CHECK(c.rot == 3 * -1 + 2);
  }

  TEST_CASE("genus bounds examples") {
    for (int g = 1; g <= 4; ++g) {
      const GenusBounds b = genus_bounds({2, 2 * g - 1, {}, {}, {}, {}});
      CHECK(b.g4 == g + 1);
      CHECK(b.tau == g + 1);
      CHECK(b.s == 2 * g + 2);
    }
    CHECK(genus_bounds({-1, 0, {}, {}, {}, {}}).g4 == 0);
    CHECK(genus_bounds({0, 1, {}, {}, {}, {}}).tau == 1);
    CHECK(genus_bounds({-5, 0, {}, {}, {}, {}}).g4 == 0);
  }

  TEST_CASE("tilde class strings") {
    for (TildeClass c : {TildeClass::unknot, TildeClass::z_slice, TildeClass::z_1_over_p_slice, TildeClass::other})
      CHECK(parse_tilde_class(to_string(c)) == c);
    CHECK_THROWS_AS(parse_tilde_class("slice-ish"), ParseError);
  }

  TEST_CASE("theorem31 pipeline") {
    const PatternData P = bundled().pattern("paper-pattern-P");
    const Theorem31Report t = theorem31_pipeline(bundled().knot("RH-trefoil"), P);
    CHECK(t.genus == 1);
    CHECK(t.stabilized.tb == 0);
    CHECK(t.stabilized.rot == 1);
    CHECK(t.satellite.tb == 2);
    CHECK(t.satellite.rot == 1);
    CHECK(t.satellite_bounds.g4 == 2);
    CHECK(t.satellite_bounds.tau == 2);
    CHECK(t.satellite_bounds.s == 4);
    CHECK(t.companion_sharp.g4 == 1);
    CHECK(t.companion_sharp.tau == 1);
    CHECK(t.companion_sharp.s == 2);
    CHECK(t.g4_increases);
    CHECK(t.tau_increases);
    CHECK(t.s_increases);
    bool homology_note = false;
    for (const auto& n : t.notes) homology_note = homology_note || n.find("homology cobordant") != std::string::npos;
    CHECK(homology_note);

    const Theorem31Report t25 = theorem31_pipeline(bundled().knot("T(2,5)"), P);
    CHECK(t25.satellite_bounds.g4 == 3);
    CHECK(t25.satellite_bounds.s == 6);

    const Theorem31Report wd = theorem31_pipeline(bundled().knot("whitehead-double-RH-trefoil"), P);
    CHECK(wd.satellite_bounds.tau > 1);
    CHECK(wd.tau_increases);
    CHECK(wd.companion_topologically_slice == true);
    CHECK(wd.satellite_topologically_slice == true);

    CHECK_THROWS_AS(theorem31_pipeline(bundled().knot("figure-eight"), P), HypothesisNotMet);
    CHECK_THROWS_AS(theorem31_pipeline(with_legendrian("low", 1, 0, 1), P), HypothesisNotMet);
    CHECK_THROWS_AS(theorem31_pipeline(with_legendrian("rot", 2, 3, 2), P), HypothesisNotMet);
    KnotProfile nog = with_legendrian("nog", 1, 1, 0);
    nog.genus.reset();
    CHECK_THROWS_AS(theorem31_pipeline(nog, P), HypothesisNotMet);
  }

  TEST_CASE("property: tb + |rot| is odd and the formulas hold") {
    const auto fronts = random_knot_fronts(kSeed + 30, 300);
    for (const auto& d : fronts) {
      const auto inv = invariants(d);
      CHECK(*inv.cusps % 2 == 0);
      CHECK(inv.tb == *inv.writhe - *inv.cusps / 2);
      CHECK(inv.rot == *inv.down_left_cusps - *inv.up_right_cusps);
      CHECK((inv.tb + std::abs(inv.rot)) % 2 != 0);
      // Reversing the orientation keeps tb and negates rot.
      FrontDiagram rev = d;
      rev.orient_up = !d.orient_up;
      const auto r = invariants(rev);
      CHECK(r.tb == inv.tb);
      CHECK(r.rot == -inv.rot);
    }
  }

  TEST_CASE("property: invariants survive cyclic rotation") {
    std::vector<FrontDiagram> fronts = random_knot_fronts(kSeed + 31, 100);
    for (const char* name : {"paper-pattern-P", "legendrian-RH-trefoil", "satellite-P-of-trefoil", "legendrian-T25-max"})
      fronts.push_back(bundled().front(name));
    for (const auto& d : fronts) {
      const auto inv = invariants(d);
      for (std::size_t s = 0; s < d.events.size(); ++s) {
        const FrontDiagram r = rotate(d, s);
        const auto ri = invariants(r);
        CHECK(ri.tb == inv.tb);
        CHECK(ri.rot == inv.rot);
        CHECK(*ri.writhe == *inv.writhe);
        CHECK(*ri.cusps == *inv.cusps);
        CHECK(winding_number(r) == winding_number(d));
      }
    }
  }

  TEST_CASE("property: trivial pattern is the identity") {
    std::mt19937_64 rng(kSeed + 32);
    const PatternData id{"core", 1, 0, 0, TildeClass::unknot, ""};
    for (int n = 0; n < 200; ++n) {
      const int tb = static_cast<int>(rng() % 41) - 20, rot = static_cast<int>(rng() % 41) - 20;
      const auto s = satellite_invariants(id, {tb, rot, {}, {}, {}, {}});
      CHECK(s.tb == tb);
      CHECK(s.rot == rot);
    }
  }

  TEST_CASE("property: genus bounds are monotone") {
    std::mt19937_64 rng(kSeed + 33);
    for (int n = 0; n < 300; ++n) {
      const int tb = static_cast<int>(rng() % 41) - 20, rot = static_cast<int>(rng() % 41) - 20;
      const int dtb = static_cast<int>(rng() % 5), drot = static_cast<int>(rng() % 5);
      const GenusBounds a = genus_bounds({tb, rot, {}, {}, {}, {}});
      const GenusBounds b = genus_bounds({tb + dtb, rot + (rot >= 0 ? drot : -drot), {}, {}, {}, {}});
      CHECK(b.g4 >= a.g4);
      CHECK(b.tau >= a.tau);
      CHECK(b.s >= a.s);
      CHECK(a.g4 >= 0);
    }
  }

  TEST_CASE("property: satellite front agrees with the satellite formula") {
    const auto diagram = invariants(bundled().front("satellite-P-of-trefoil"));
    const auto formula =
        satellite_invariants(bundled().pattern("paper-pattern-P"), invariants(bundled().front("legendrian-RH-trefoil")));
    CHECK(diagram.tb == formula.tb);
    CHECK(diagram.rot == formula.rot);
  }
}
