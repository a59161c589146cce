#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotconc/error.hpp"
#include "knotconc/integer.hpp"

namespace knotconc {

/// Framed link given by its linking matrix (framings on the diagonal) with
/// named classes written in the meridian basis.
struct SurgeryPresentation {
  std::string name;
  IntMatrix linking;
  std::vector<std::string> components;  // optional labels, one per row
  std::vector<std::pair<std::string, IntVector>> classes;
  std::string note;

  std::size_t size() const { return static_cast<std::size_t>(linking.rows()); }
  const IntVector& tracked(const std::string& cls) const;  // ValidationError if absent
  void validate() const;
};

SurgeryPresentation parse_presentation(std::string_view text, const std::string& name = {});
std::string format_presentation(const SurgeryPresentation& s);

template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U, D, V;  // U·M·V = D
};

/// Smith normal form by unimodular row and column operations. The pivot is
/// the smallest nonzero |entry| of the remaining block, ties broken in
/// row-major order; nonzero diagonal entries are positive and each divides
/// the next.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& M) {
  using std::abs;
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithDecomposition<Scalar> r{Matrix<Scalar>::Identity(m, m), M, Matrix<Scalar>::Identity(n, n)};
  auto& A = r.D;
  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < abs(A(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return r;
      if (pi != t) {
        A.row(pi).swap(A.row(t));
        r.U.row(pi).swap(r.U.row(t));
      }
      if (pj != t) {
        A.col(pj).swap(A.col(t));
        r.V.col(pj).swap(r.V.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        const Scalar q = A(i, t) / A(t, t);
        A.row(i) -= q * A.row(t);
        r.U.row(i) -= q * r.U.row(t);
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        const Scalar q = A(t, j) / A(t, t);
        A.col(j) -= q * A.col(t);
        r.V.col(j) -= q * r.V.col(t);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      A.row(t) += A.row(bad);
      r.U.row(t) += r.U.row(bad);
    }
    if (A(t, t) < 0) {
      A.row(t) = -A.row(t);
      r.U.row(t) = -r.U.row(t);
    }
  }
  return r;
}

/// Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk with d1 | ... | dk, every di >= 2. Element
/// coordinates list the free part first, then one residue per torsion factor.
struct AbelianGroupDescription {
  int rank = 0;
  std::vector<Integer> torsion;
  std::vector<std::pair<std::string, IntVector>> images;

  const IntVector& image(const std::string& cls) const;
  bool is_zero(const IntVector& x) const;
  IntVector reduce(const IntVector& x) const;
  std::string str() const;                          // "Z^2 + Z/6"
  std::string element_str(const IntVector& x) const;  // "(1, 0; 3 mod 6)"
  bool operator==(const AbelianGroupDescription& o) const;
};

/// Cokernel of the linking matrix with the tracked classes carried through
/// the Smith change of basis.
AbelianGroupDescription first_homology(const SurgeryPresentation& s);

/// Tensor with Z[1/p]: strips from every invariant factor the primes
/// dividing p and reduces class images accordingly.
AbelianGroupDescription localize(const AbelianGroupDescription& g, const Integer& p);

struct MeridianCheck {
  std::string mu0, mu1;
  std::int64_t p = 1;
  AbelianGroupDescription integral, localized;
  IntVector mu0_image, mu1_image;  // in the localized group
  bool spans_free_summand = false;  // mu0 generates a Z[1/p] summand
  std::string summary;
};

/// Checks mu0 = p·mu1 in H1, then again in H1 tensored with Z[1/p], where
/// p is a positive unit. Throws ClassMismatch with the residual mu0 - p·mu1
/// when either fails.
MeridianCheck cobordism_meridian_check(const SurgeryPresentation& s, const std::string& mu0,
                                       const std::string& mu1, std::int64_t p);

/// Linking-matrix model of the cobordism built from K, the pattern core
/// P-tilde and one extra 2-handle H that links K once and P-tilde p times.
/// Tracks mu_K, mu_Ptilde and mu_PK.
SurgeryPresentation winding_cobordism_model(std::int64_t p);

}  // namespace knotconc
