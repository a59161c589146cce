#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/seifert.hpp"

namespace knotconc {

/// A declared (not computed) value together with where it comes from.
template <typename T>
struct Cited {
  T value{};
  std::string citation;
};

struct SliceGenusBounds {
  std::optional<int> lower, upper;
  std::string citation;
};

/// A Legendrian representative, either read off a catalog front or cited.
struct LegendrianDatum {
  int tb = 0;
  int rot = 0;
  std::string source;  // front name or citation
};

struct KnotProfile {
  std::string name;
  std::optional<SeifertMatrix> seifert;
  /// σ_K(ω) = σ_V(ω^signature_pullback) and δ_K(t) = δ_V(t^signature_pullback);
  /// 1 for a knot given by its own Seifert matrix, p for a (p,1)-cable.
  std::int64_t signature_pullback = 1;
  std::optional<IntLaurent> declared_alexander;
  std::optional<Cited<int>> tau;
  /// Set when tau came from a rule whose hypothesis is not established;
  /// such a value is shown but never used as evidence.
  std::optional<std::string> tau_caveat;
  std::optional<Cited<int>> s;
  std::optional<Cited<int>> genus;
  std::optional<SliceGenusBounds> slice_genus;
  std::optional<Cited<bool>> topologically_slice;
  std::optional<LegendrianDatum> legendrian;
  /// Citation for "δ(t^k) is irreducible for every k", when known.
  std::optional<std::string> power_irreducible_citation;

  /// From the Seifert matrix when present (pulled back), else declared.
  std::optional<IntLaurent> alexander() const;
  bool has_signature() const { return seifert.has_value(); }
  /// Throws MissingSeifert without a matrix.
  int signature(const RootOfUnity& omega) const;
  SignatureFunction signature_function() const;

  /// Declared value, or derived from Δ ≐ 1 (Freedman), or empty.
  std::optional<Cited<bool>> topologically_slice_status() const;

  /// g4 <= g and |tau| <= g4 where the data are present; throws
  /// ValidationError naming the broken inequality.
  void validate() const;
};

inline const char* kFreedmanCitation =
    "Freedman, The topology of four-dimensional manifolds, J. Differential Geom. 17 (1982); "
    "Freedman-Quinn, Topology of 4-manifolds (1990), Section 11.7: Alexander polynomial 1 implies topologically slice";

}  // namespace knotconc
