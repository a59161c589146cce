#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotconc/profile.hpp"

namespace knotconc {

enum class FrontEventKind { left_cusp, right_cusp, crossing };

/// One column of a front: a left cusp creating strands i, i+1, a right cusp
/// joining them, or a crossing of strands i and i+1. Strands are numbered
/// from the bottom, starting at 0, among those present at that column.
struct FrontEvent {
  FrontEventKind kind;
  int height;
  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

/// Event-list encoding of a Legendrian front. With periodic == 0 the front
/// lives in the plane and starts and ends with no strands; with periodic == n
/// it lives in the solid torus (the two vertical ends are identified) and n
/// strands cross the cut.
struct FrontDiagram {
  std::string name;
  std::vector<FrontEvent> events;
  int periodic = 0;
  std::size_t orient_event = 0;  // must be a cusp
  bool orient_up = false;        // traversal direction through that cusp

  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

struct LegendrianInvariants {
  int tb = 0;
  int rot = 0;
  std::optional<int> writhe, cusps, down_left_cusps, up_right_cusps;
};

FrontDiagram parse_front(std::string_view text, const std::string& name = {});
std::string format_front(const FrontDiagram& d);

/// Throws NonClosed (strand counts do not return), MultiComponent (the
/// traversal misses segments) or ValidationError (bad heights, marker).
LegendrianInvariants invariants(const FrontDiagram& d);

/// Right-moving minus left-moving strands at the cut; 0 for planar fronts.
int winding_number(const FrontDiagram& d);

/// The same curve cut open after `shift` events (always periodic).
FrontDiagram rotate(const FrontDiagram& d, std::size_t shift);

enum class StabilizationSign { positive, negative };

/// tb drops by count; rot rises (positive) or falls (negative) by count.
LegendrianInvariants stabilize(const LegendrianInvariants& inv, StabilizationSign sign, int count);

enum class TildeClass { unknot, z_slice, z_1_over_p_slice, other };
const char* to_string(TildeClass c);
TildeClass parse_tilde_class(const std::string& s);

struct PatternData {
  std::string name;
  int winding = 1;
  int tb = 0;
  int rot = 0;
  TildeClass tilde = TildeClass::other;
  std::string tilde_citation;
};

PatternData pattern_from_front(const FrontDiagram& d, TildeClass tilde, std::string tilde_citation);

/// tb(P(K)) = w²·tb(K) + tb(P), rot(P(K)) = w·rot(K) + rot(P); only tb
/// and rot are filled in.
LegendrianInvariants satellite_invariants(const PatternData& pattern, const LegendrianInvariants& companion);

/// Slice-Bennequin lower bounds from one Legendrian representative.
struct GenusBounds {
  int g4 = 0;
  int tau = 0;
  int s = 0;
};
GenusBounds genus_bounds(const LegendrianInvariants& inv);

struct Theorem31Report {
  std::string companion;
  std::string pattern;
  int genus = 0;
  LegendrianInvariants companion_inv, stabilized, satellite;
  GenusBounds satellite_bounds;
  GenusBounds companion_sharp;  // g4 = τ = g, s = 2g
  bool g4_increases = false, tau_increases = false, s_increases = false;
  std::optional<bool> companion_topologically_slice, satellite_topologically_slice;
  std::vector<std::string> notes;
};

/// Needs declared genus g and a Legendrian datum with tb = 2g - 1, rot = 0
/// (HypothesisNotMet otherwise).
Theorem31Report theorem31_pipeline(const KnotProfile& K, const PatternData& pattern);

}  // namespace knotconc
