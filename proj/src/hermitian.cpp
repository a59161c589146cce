// Exact signature of a Hermitian form over Z[t, t^{-1}] at a root of unity.
//
// Fraction-free elimination keeps every pivot a leading principal minor
// D_k of a congruent matrix, so the signature is sum_k sign(D_k)·sign(D_{k-1})
// once each D_k is nonzero at ω. Pivots that vanish at ω are avoided with a
// symmetric swap, or, when the whole remaining diagonal vanishes, with the
// congruence row_i += c·row_j, col_i += conj(c)·col_j for c in {1, t}.

#include "knotconc/detail/unit_circle.hpp"
#include "knotconc/seifert.hpp"

namespace knotconc {

namespace {

bool vanishes(const IntLaurent& a, const RootOfUnity& w) { return detail::vanishes_at(a, w.num(), w.den()); }

void symmetric_swap(Matrix<IntLaurent>& a, Eigen::Index k, Eigen::Index i) {
  if (i == k) return;
  const Eigen::Index n = a.rows();
  for (Eigen::Index m = k; m < n; ++m) std::swap(a(k, m), a(i, m));
  for (Eigen::Index m = k; m < n; ++m) std::swap(a(m, k), a(m, i));
}

// row_i += c·row_j, col_i += conj(c)·col_j on the trailing block.
void add_congruence(Matrix<IntLaurent>& a, Eigen::Index k, Eigen::Index i, Eigen::Index j, const IntLaurent& c) {
  const Eigen::Index n = a.rows();
  const IntLaurent cbar = reciprocal(c);
  for (Eigen::Index m = k; m < n; ++m) a(i, m) += c * a(j, m);
  for (Eigen::Index m = k; m < n; ++m) a(m, i) += cbar * a(m, j);
}

// Moves a pivot that is nonzero at ω to position (k, k).
void choose_pivot(Matrix<IntLaurent>& a, Eigen::Index k, const RootOfUnity& w) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = k; i < n; ++i) {
    if (!vanishes(a(i, i), w)) {
      symmetric_swap(a, k, i);
      return;
    }
  }
  for (Eigen::Index i = k; i < n; ++i) {
    for (Eigen::Index j = k; j < n; ++j) {
      if (i == j || vanishes(a(i, j), w)) continue;
      for (const IntLaurent& c : {IntLaurent(1), IntLaurent::t()}) {
        Matrix<IntLaurent> trial = a;
        add_congruence(trial, k, i, j, c);
        if (!vanishes(trial(i, i), w)) {
          a = std::move(trial);
          symmetric_swap(a, k, i);
          return;
        }
      }
    }
  }
  throw SingularAtOmega("Hermitian form is singular at omega = " + w.str());
}

}  // namespace

Matrix<IntLaurent> hermitian_form(const IntMatrix& V) {
  const Eigen::Index n = V.rows();
  Matrix<IntLaurent> h(n, n);
  const IntLaurent one_minus_t = IntLaurent(1) - IntLaurent::t();
  const IntLaurent one_minus_tinv = reciprocal(one_minus_t);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = one_minus_t * V(i, j) + one_minus_tinv * V(j, i);
  return h;
}

int hermitian_signature(const Matrix<IntLaurent>& H, const RootOfUnity& omega) {
  Matrix<IntLaurent> a = H;
  const Eigen::Index n = a.rows();
  IntLaurent prev(1);
  int prev_sign = 1;
  int sig = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    choose_pivot(a, k, omega);
    const IntLaurent& d = a(k, k);
    const int s = detail::certified_sign(detail::circle_polynomial(d), omega.num(), omega.den());
    if (s == 0) throw InternalError("hermitian_signature: certified pivot sign is zero");
    sig += s * prev_sign;
    prev_sign = s;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = exact_div(d * a(i, j) - a(i, k) * a(k, j), prev);
    prev = d;
  }
  return sig;
}

int levine_tristram(const SeifertMatrix& V, const RootOfUnity& omega) {
  if (omega.is_one()) throw OmegaIsOne("levine_tristram: omega = 1");
  if (V.size() == 0) return 0;
  if (vanishes(alexander(V), omega))
    throw SingularAtOmega("omega = " + omega.str() + " is a root of the Alexander polynomial");
  return hermitian_signature(hermitian_form(V.matrix()), omega);
}

}  // namespace knotconc
