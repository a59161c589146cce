#include "knotconc/legendrian.hpp"

#include <cstdlib>

#include "knotconc/surgery.hpp"

namespace knotconc {

namespace {

std::vector<int> strand_counts(const FrontDiagram& d) {
  std::vector<int> counts{d.periodic};
  for (std::size_t g = 0; g < d.events.size(); ++g) {
    const auto& e = d.events[g];
    const int n = counts.back();
    auto bad = [&](const std::string& what) {
      throw ValidationError("front '" + d.name + "' event " + std::to_string(g) + ": " + what);
    };
    switch (e.kind) {
      case FrontEventKind::left_cusp:
        if (e.height > n) bad("left cusp above the top strand");
        counts.push_back(n + 2);
        break;
      case FrontEventKind::right_cusp:
        if (e.height + 1 >= n) bad("right cusp needs strands i and i+1");
        counts.push_back(n - 2);
        break;
      case FrontEventKind::crossing:
        if (e.height + 1 >= n) bad("crossing needs strands i and i+1");
        counts.push_back(n);
        break;
    }
  }
  return counts;
}

// Direction (+1 rightward, -1 leftward) of every strand segment; segment
// (g, j) is strand j in the gap before event g.
struct Traversal {
  std::vector<int> counts;
  std::vector<std::vector<int>> dir;
};

Traversal traverse(const FrontDiagram& d) {
  if (d.events.empty()) throw ValidationError("front '" + d.name + "' has no events");
  Traversal t;
  t.counts = strand_counts(d);
  const std::size_t E = d.events.size();
  if (t.counts.back() != d.periodic)
    throw NonClosed("front '" + d.name + "' ends with " + std::to_string(t.counts.back()) + " strands, expected " +
                    std::to_string(d.periodic));
  if (d.orient_event >= E) throw ValidationError("front '" + d.name + "': orient marker names a missing event");
  const FrontEvent& oe = d.events[d.orient_event];
  if (oe.kind == FrontEventKind::crossing)
    throw ValidationError("front '" + d.name + "': orient marker must name a cusp");

  t.dir.resize(E + 1);
  for (std::size_t g = 0; g <= E; ++g) t.dir[g].assign(static_cast<std::size_t>(t.counts[g]), 0);
  const bool per = d.periodic > 0;
  auto canon = [&](std::size_t g) { return per && g == E ? 0 : g; };

  // Starting segment leaves the marked cusp.
  std::size_t g;
  int j, dir;
  const bool down = !d.orient_up;
  if (oe.kind == FrontEventKind::left_cusp) {
    g = d.orient_event + 1;
    j = down ? oe.height : oe.height + 1;
    dir = 1;
  } else {
    g = d.orient_event;
    j = down ? oe.height : oe.height + 1;
    dir = -1;
  }
  g = canon(g);

  std::size_t visited = 0;
  while (t.dir[g][static_cast<std::size_t>(j)] == 0) {
    t.dir[g][static_cast<std::size_t>(j)] = dir;
    ++visited;
    if (dir > 0) {
      if (g == E) throw InternalError("front traversal ran off the right end");
      const FrontEvent& e = d.events[g];
      const int i = e.height;
      if (e.kind == FrontEventKind::crossing) {
        j = j == i ? i + 1 : j == i + 1 ? i : j;
        g = g + 1;
      } else if (e.kind == FrontEventKind::left_cusp) {
        j = j < i ? j : j + 2;
        g = g + 1;
      } else if (j == i || j == i + 1) {
        j = j == i ? i + 1 : i;
        dir = -1;
      } else {
        j = j < i ? j : j - 2;
        g = g + 1;
      }
    } else {
      std::size_t gg = g;
      if (gg == 0) {
        if (!per) throw InternalError("front traversal ran off the left end");
        gg = E;
      }
      const FrontEvent& e = d.events[gg - 1];
      const int i = e.height;
      if (e.kind == FrontEventKind::crossing) {
        j = j == i ? i + 1 : j == i + 1 ? i : j;
        g = gg - 1;
      } else if (e.kind == FrontEventKind::right_cusp) {
        j = j < i ? j : j + 2;
        g = gg - 1;
      } else if (j == i || j == i + 1) {
        j = j == i ? i + 1 : i;
        g = gg;
        dir = 1;
      } else {
        j = j < i ? j : j - 2;
        g = gg - 1;
      }
    }
    g = canon(g);
  }
  std::size_t total = 0;
  for (std::size_t k = 0; k <= E; ++k) total += static_cast<std::size_t>(t.counts[k]);
  if (per) total -= static_cast<std::size_t>(d.periodic);
  if (visited != total)
    throw MultiComponent("front '" + d.name + "' has more than one component (" + std::to_string(visited) + " of " +
                         std::to_string(total) + " segments traversed)");
  return t;
}

int ceil_div2(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

}  // namespace

LegendrianInvariants invariants(const FrontDiagram& d) {
  const Traversal t = traverse(d);
  const std::size_t E = d.events.size();
  auto dir_at = [&](std::size_t g, int j) {
    if (d.periodic && g == E) g = 0;
    return t.dir[g][static_cast<std::size_t>(j)];
  };
  int writhe = 0, down_left = 0, up_left = 0, down_right = 0, up_right = 0;
  for (std::size_t g = 0; g < E; ++g) {
    const FrontEvent& e = d.events[g];
    switch (e.kind) {
      case FrontEventKind::crossing:
        writhe += dir_at(g, e.height) * dir_at(g, e.height + 1);
        break;
      case FrontEventKind::left_cusp:
        // Downward when the upper branch runs into the cusp.
        (dir_at(g + 1, e.height + 1) < 0 ? down_left : up_left) += 1;
        break;
      case FrontEventKind::right_cusp:
        // Upward when the lower branch runs into the cusp.
        (dir_at(g, e.height) > 0 ? up_right : down_right) += 1;
        break;
    }
  }
  LegendrianInvariants inv;
  const int cusps = down_left + up_left + down_right + up_right;
  inv.writhe = writhe;
  inv.cusps = cusps;
  inv.down_left_cusps = down_left;
  inv.up_right_cusps = up_right;
  inv.tb = writhe - cusps / 2;
  inv.rot = down_left - up_right;
  return inv;
}

int winding_number(const FrontDiagram& d) {
  const Traversal t = traverse(d);
  int w = 0;
  for (int v : t.dir[0]) w += v;
  return w;
}

FrontDiagram rotate(const FrontDiagram& d, std::size_t shift) {
  const std::vector<int> counts = strand_counts(d);
  const std::size_t E = d.events.size();
  if (E == 0) return d;
  const std::size_t s = shift % E;
  FrontDiagram r = d;
  r.periodic = counts[s];
  r.events.clear();
  for (std::size_t k = 0; k < E; ++k) r.events.push_back(d.events[(s + k) % E]);
  r.orient_event = (d.orient_event + E - s) % E;
  return r;
}

LegendrianInvariants stabilize(const LegendrianInvariants& inv, StabilizationSign sign, int count) {
  if (count < 0) throw ValidationError("stabilize: count must be nonnegative");
  if (count == 0) return inv;
  LegendrianInvariants r;
  r.tb = inv.tb - count;
  r.rot = inv.rot + (sign == StabilizationSign::positive ? count : -count);
  r.writhe = inv.writhe;
  if (inv.cusps) r.cusps = *inv.cusps + 2 * count;
  return r;
}

const char* to_string(TildeClass c) {
  switch (c) {
    case TildeClass::unknot: return "unknot";
    case TildeClass::z_slice: return "Z-slice";
    case TildeClass::z_1_over_p_slice: return "Z[1/p]-slice";
    case TildeClass::other: return "other";
  }
  return "other";
}

TildeClass parse_tilde_class(const std::string& s) {
  if (s == "unknot") return TildeClass::unknot;
  if (s == "Z-slice") return TildeClass::z_slice;
  if (s == "Z[1/p]-slice") return TildeClass::z_1_over_p_slice;
  if (s == "other") return TildeClass::other;
  throw ParseError("unknown tilde class '" + s + "' (expected unknot, Z-slice, Z[1/p]-slice or other)");
}

PatternData pattern_from_front(const FrontDiagram& d, TildeClass tilde, std::string tilde_citation) {
  const LegendrianInvariants inv = invariants(d);
  return PatternData{d.name, winding_number(d), inv.tb, inv.rot, tilde, std::move(tilde_citation)};
}

LegendrianInvariants satellite_invariants(const PatternData& P, const LegendrianInvariants& K) {
  LegendrianInvariants r;
  r.tb = P.winding * P.winding * K.tb + P.tb;
  r.rot = P.winding * K.rot + P.rot;
  return r;
}

GenusBounds genus_bounds(const LegendrianInvariants& inv) {
  const int m = inv.tb + std::abs(inv.rot);
  GenusBounds b;
  b.g4 = std::max(0, ceil_div2(m + 1));
  b.tau = ceil_div2(m + 1);
  b.s = m + 1;
  return b;
}

Theorem31Report theorem31_pipeline(const KnotProfile& K, const PatternData& P) {
  if (!K.genus) throw HypothesisNotMet("theorem31: genus of '" + K.name + "' is not declared");
  if (!K.legendrian) throw HypothesisNotMet("theorem31: no Legendrian representative for '" + K.name + "'");
  const int g = K.genus->value;
  const LegendrianDatum& L = *K.legendrian;
  if (L.tb != 2 * g - 1 || L.rot != 0)
    throw HypothesisNotMet("theorem31: needs tb = 2g - 1 = " + std::to_string(2 * g - 1) + " and rot = 0, got tb " +
                           std::to_string(L.tb) + ", rot " + std::to_string(L.rot));
  Theorem31Report rep;
  rep.companion = K.name;
  rep.pattern = P.name;
  rep.genus = g;
  rep.companion_inv.tb = L.tb;
  rep.companion_inv.rot = L.rot;
  rep.stabilized = stabilize(rep.companion_inv, StabilizationSign::positive, 2 * g - 1);
  rep.satellite = satellite_invariants(P, rep.stabilized);
  rep.satellite_bounds = genus_bounds(rep.satellite);
  // tb + |rot| = 2g - 1 forces g4 = tau = g and s = 2g for the companion.
  rep.companion_sharp = GenusBounds{g, g, 2 * g};
  rep.g4_increases = rep.satellite_bounds.g4 > rep.companion_sharp.g4;
  rep.tau_increases = rep.satellite_bounds.tau > rep.companion_sharp.tau;
  rep.s_increases = rep.satellite_bounds.s > rep.companion_sharp.s;

  if (K.tau && K.tau->value != g)
    rep.notes.push_back("declared tau " + std::to_string(K.tau->value) + " differs from the sharp value " +
                        std::to_string(g));
  if (K.s && K.s->value != 2 * g)
    rep.notes.push_back("declared s " + std::to_string(K.s->value) + " differs from the sharp value " +
                        std::to_string(2 * g));

  if (P.winding == 1 && P.tilde == TildeClass::unknot) {
    const MeridianCheck mc = cobordism_meridian_check(winding_cobordism_model(1), "mu_K", "mu_PK", 1);
    rep.notes.push_back(std::string("winding number 1 and P-tilde unknotted: zero surgeries on K and P(K) are "
                                    "smoothly Z-homology cobordant rel meridians; modeled cobordism check passes (") +
                        mc.summary + ")");
  }
  if (const auto ts = K.topologically_slice_status()) {
    rep.companion_topologically_slice = ts->value;
    const auto a = K.alexander();
    if (P.winding == 1 && P.tilde == TildeClass::unknot && a && doteq(*a, IntLaurent(1))) {
      rep.satellite_topologically_slice = true;
      rep.notes.push_back("Alexander polynomial of P(K) is Delta_K(t) = 1, so P(K) is topologically slice (" +
                          std::string(kFreedmanCitation) + ")");
    }
  }
  return rep;
}

}  // namespace knotconc
