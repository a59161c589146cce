#include "knotconc/factor.hpp"

namespace knotconc {

// a ≐ f·f(t^{-1}) iff the integer content is a square, every
// non-self-reciprocal irreducible q appears exactly as often as its
// reciprocal, and every self-reciprocal irreducible appears to an even power.
FoxMilnorResult fox_milnor_pairing(const IntLaurent& a) {
  FoxMilnorResult res;
  res.factorization = factor(a);
  const auto& fs = res.factorization.factors;

  Integer root;
  if (!is_perfect_square(res.factorization.content, &root)) {
    res.violating = Factor{IntLaurent(res.factorization.content), 1};
    res.violating_self_reciprocal = true;
    return res;
  }

  IntLaurent f(root);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const IntLaurent partner = normal_form(reciprocal(fs[i].poly));
    if (partner == fs[i].poly) {
      if (fs[i].multiplicity % 2 != 0) {
        res.violating = fs[i];
        res.violating_self_reciprocal = true;
        return res;
      }
      for (int m = 0; m < fs[i].multiplicity / 2; ++m) f *= fs[i].poly;
      continue;
    }
    std::size_t j = 0;
    while (j < fs.size() && !(fs[j].poly == partner)) ++j;
    if (j == fs.size() || fs[j].multiplicity != fs[i].multiplicity) {
      res.violating = fs[i];
      return res;
    }
    if (i < j)
      for (int m = 0; m < fs[i].multiplicity; ++m) f *= fs[i].poly;
  }
  res.paired = true;
  res.witness = f;
  return res;
}

}  // namespace knotconc
