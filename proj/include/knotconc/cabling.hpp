#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotconc/factor.hpp"
#include "knotconc/profile.hpp"

namespace knotconc {

enum class Verdict { obstructed, obstructed_up_to_complexity, consistent_up_to_bounds, no_obstruction_found };
enum class Category { topological, smooth };

const char* to_string(Verdict v);
const char* to_string(Category c);

/// σ(ω) versus a second value at the same ω: σ_K(ω^p) for the finite-order
/// test, σ_{K1}(ω) when comparing two knots.
struct SignatureWitness {
  RootOfUnity omega;
  int first = 0;
  int second = 0;
  std::string first_label, second_label;
};

/// An irreducible factor breaking the Fox–Milnor pairing at complexity k.
struct FactorWitness {
  int k = 1;
  IntLaurent factor;
  int multiplicity = 1;
  bool self_reciprocal = false;
  bool irreducible = false;  // certified by the factorization
};

struct TauWitness {
  int tau0 = 0, tau1 = 0;
  std::string citation0, citation1;
};

/// δ0(t^k)·δ1(t^k) ≐ f(t)f(t^{-1}) holds at this k.
struct FoxMilnorPass {
  int k = 1;
  IntLaurent f;
};

using Witness = std::variant<SignatureWitness, FactorWitness, TauWitness, FoxMilnorPass>;

struct ObstructionReport {
  Verdict verdict = Verdict::no_obstruction_found;
  std::optional<Category> category;
  std::vector<Witness> witnesses;
  std::optional<std::int64_t> p;
  std::optional<int> k_max;
  std::optional<std::int64_t> angle_denominator_bound;
  std::vector<std::string> notes;
};

struct SearchOptions {
  int k_max = 6;
  std::int64_t angle_denominator_bound = 211;
};

IntLaurent cable_alexander(const IntLaurent& delta, std::int64_t p);
SignatureFunction cable_signature(const SignatureFunction& sigma, std::int64_t p);

/// Profile of the (p,1)-cable: Alexander polynomial δ(t^p), signature
/// pulled back along ω ↦ ω^p. Declared τ, s and genus data are dropped.
KnotProfile cable_profile(const KnotProfile& K, std::int64_t p);

/// Searches prime denominators b <= bound, then numerators a, for ω with
/// σ_K(ω) = 0 and σ_K(ω^p) != 0.
ObstructionReport finite_order_obstruction(const KnotProfile& K, std::int64_t p,
                                           std::int64_t angle_denominator_bound = 211);

ObstructionReport fox_milnor_obstruction(const KnotProfile& K0, const KnotProfile& K1, int k_max = 6);

/// τ(K(p,1)) = p·τ(K). Throws MissingTau.
KnotProfile tau_cable_rule(const KnotProfile& K, std::int64_t p);

struct TauRule {
  std::string name, statement, citation;
};
const std::vector<TauRule>& tau_rules();
/// τ(K # J) = τ(K) + τ(J); empty unless both are declared.
std::optional<Cited<int>> tau_connected_sum(const KnotProfile& K, const KnotProfile& J);
/// τ(-K) = -τ(K).
std::optional<Cited<int>> tau_mirror(const KnotProfile& K);

/// Combines signature, Fox–Milnor and τ evidence.
ObstructionReport rational_concordance_verdict(const KnotProfile& K0, const KnotProfile& K1,
                                               const SearchOptions& options = {});

/// The first ω (prime b <= bound, then a) away from all jumps where the two
/// signature functions differ.
std::optional<SignatureWitness> signature_mismatch(const KnotProfile& K0, const KnotProfile& K1,
                                                   std::int64_t angle_denominator_bound);

}  // namespace knotconc
