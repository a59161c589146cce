#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotconc/detail/unit_circle.hpp"
#include "knotconc/integer.hpp"
#include "knotconc/laurent.hpp"

namespace knotconc {

/// ω = exp(2πi·a/b) with gcd(a, b) = 1 and 0 <= a < b.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t a, std::int64_t b);

  /// Parses "a/b" (also accepts a bare integer, meaning a/1).
  static RootOfUnity parse(const std::string& text);

  std::int64_t num() const { return a_; }
  std::int64_t den() const { return b_; }
  bool is_one() const { return a_ == 0; }
  RootOfUnity conjugate() const { return {-a_, b_}; }
  RootOfUnity pow(std::int64_t k) const;
  std::string str() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t a_ = 0, b_ = 1;
};

/// Integer square matrix V with |det(V - V^T)| = 1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws ValidationError when the matrix is not square or the
  /// determinant condition fails.
  explicit SeifertMatrix(IntMatrix v, std::string name = {});

  const IntMatrix& matrix() const { return v_; }
  const std::string& name() const { return name_; }
  Eigen::Index size() const { return v_.rows(); }
  Eigen::Index genus() const { return v_.rows() / 2; }

 private:
  IntMatrix v_;
  std::string name_;
};

/// Fraction-free (Bareiss) determinant over an integral domain; exact_div
/// and is_zero are found by argument-dependent lookup.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sgn = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) return Scalar(0);
      a.row(k).swap(a.row(r));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = exact_div(Scalar(a(k, k) * a(i, j) - a(i, k) * a(k, j)), prev);
    prev = a(k, k);
  }
  return sgn > 0 ? Scalar(a(n - 1, n - 1)) : Scalar(-a(n - 1, n - 1));
}

IntMatrix parse_int_matrix(const std::vector<std::vector<std::int64_t>>& rows);
std::string format_matrix(const IntMatrix& m);

/// Symmetric representative of det(V - tV^T) with positive leading
/// coefficient; the unknot (0x0) gives 1.
IntLaurent alexander(const SeifertMatrix& V);

/// The Hermitian matrix (1 - t)V + (1 - t^{-1})V^T over Z[t, t^{-1}].
Matrix<IntLaurent> hermitian_form(const IntMatrix& V);

/// Signature of a Laurent-Hermitian matrix H at ω, assuming H(ω) is
/// nonsingular (throws SingularAtOmega otherwise).
int hermitian_signature(const Matrix<IntLaurent>& H, const RootOfUnity& omega);

/// Levine–Tristram signature σ_V(ω). Throws OmegaIsOne for ω = 1 and
/// SingularAtOmega when ω is a root of the Alexander polynomial.
int levine_tristram(const SeifertMatrix& V, const RootOfUnity& omega);

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
/// -V^T.
SeifertMatrix mirror(const SeifertMatrix& a);

/// Step function on the unit circle, constant on the open arcs between
/// unit-circle roots of its jump polynomial, zero at ω = 1.
class SignatureFunction {
 public:
  struct Arc {
    double start_turn = 0;  // θ/2π of the left end (display only)
    double end_turn = 0;
    RootOfUnity sample;     // exact point inside the arc
    int value = 0;
  };

  /// Jump point, with its x = 2cos θ isolating interval.
  struct Jump {
    Rational x_lo, x_hi;
    bool exact = false;
    double turn = 0;  // θ/2π in [0, 1/2] (display only)
  };

  using Evaluator = std::function<int(const RootOfUnity&)>;

  /// Builds the arcs of the upper half circle and evaluates once per arc.
  SignatureFunction(IntLaurent jump_polynomial, const Evaluator& evaluate);

  /// Value at ω: 0 at ω = 1, throws SingularAtOmega on a jump point.
  int value_at(const RootOfUnity& omega) const;
  bool is_jump(const RootOfUnity& omega) const;
  bool identically_zero() const;

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const IntLaurent& jump_polynomial() const { return jump_poly_; }

 private:
  std::size_t locate(const RootOfUnity& omega) const;

  IntLaurent jump_poly_;
  std::shared_ptr<const detail::RootIsolator> isolator_;
  std::vector<detail::RealRoot> roots_;
  std::vector<Jump> jumps_;
  std::vector<Arc> arcs_;
};

SignatureFunction signature_function(const SeifertMatrix& V);

}  // namespace knotconc
