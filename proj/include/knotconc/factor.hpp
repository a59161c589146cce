#pragma once

#include <optional>
#include <vector>

#include "knotconc/laurent.hpp"

namespace knotconc {

struct Factor {
  IntLaurent poly;  // normal form: lowest exponent 0, primitive, leading coefficient > 0
  int multiplicity = 1;
};

/// a = sign · content · t^t_power · prod factors[i].poly^multiplicity.
struct Factorization {
  int sign = 1;
  std::int64_t t_power = 0;
  Integer content = 1;
  std::vector<Factor> factors;

  IntLaurent expand() const;
  int degree_sum() const;
};

/// Complete factorization over Q (Gauss: over Z up to the integer content).
/// Factors are ordered by degree, then by coefficients from the top down.
Factorization factor(const IntLaurent& a);

/// Nonconstant, content one up to sign, and irreducible over Q.
bool is_irreducible(const IntLaurent& a);

/// normal_form(reciprocal(q)) == normal_form(q).
bool is_self_reciprocal(const IntLaurent& q);

/// Outcome of testing a ≐ f(t)·f(t^{-1}).
struct FoxMilnorResult {
  bool paired = false;
  IntLaurent witness;                  // f, when paired
  std::optional<Factor> violating;     // offending factor, when not paired
  bool violating_self_reciprocal = false;
  Factorization factorization;
};

FoxMilnorResult fox_milnor_pairing(const IntLaurent& a);

}  // namespace knotconc
