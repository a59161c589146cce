#pragma once

// Shared helpers for the test suites: fixed-seed generators and oracles
// that do not go through the library's own algorithms.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/seifert.hpp"

namespace kt {

using namespace knotconc;

inline constexpr std::uint64_t kSeed = 20240611;
// Eigenvalues closer to zero than this count as zero in the float oracle.
inline constexpr double kEigenTolerance = 1e-9;

inline IntLaurent poly(std::int64_t low, std::vector<std::int64_t> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntLaurent::from_coefficients(low, std::move(v));
}

inline IntLaurent P(const char* s) { return parse_laurent(s); }

inline IntMatrix int_matrix(const std::vector<std::vector<std::int64_t>>& rows) { return parse_int_matrix(rows); }

inline IntLaurent random_poly(std::mt19937_64& rng, int max_deg, int bound, bool nonzero_ends = true) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-bound, bound);
  const int d = deg(rng);
  std::vector<std::int64_t> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = coef(rng);
  if (nonzero_ends) {
    while (c.front() == 0) c.front() = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
  }
  return poly(0, c);
}

/// V with V - V^T the standard symplectic form, plus a random symmetric part.
inline IntMatrix random_seifert(std::mt19937_64& rng, int genus, int bound) {
  const int n = 2 * genus;
  std::uniform_int_distribution<int> coef(-bound, bound);
  IntMatrix V = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int s = coef(rng);
      V(i, j) += s;
      if (i != j) V(j, i) += s;
    }
  for (int g = 0; g < genus; ++g) V(2 * g, 2 * g + 1) += 1;
  return V;
}

/// Signature of (1 - ω)V + (1 - ω̄)V^T from floating-point eigenvalues.
inline int eigen_signature(const IntMatrix& V, std::int64_t a, std::int64_t b) {
  using C = std::complex<double>;
  const Eigen::Index n = V.rows();
  if (n == 0) return 0;
  const double th = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(b);
  const C w(std::cos(th), std::sin(th));
  Eigen::MatrixXcd H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      H(i, j) = (1.0 - w) * V(i, j).convert_to<double>() + (1.0 - std::conj(w)) * V(j, i).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  int s = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e = es.eigenvalues()(i);
    if (e > kEigenTolerance) ++s;
    else if (e < -kEigenTolerance) --s;
  }
  return s;
}

inline double min_abs_eigenvalue(const IntMatrix& V, std::int64_t a, std::int64_t b) {
  using C = std::complex<double>;
  const Eigen::Index n = V.rows();
  const double th = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(b);
  const C w(std::cos(th), std::sin(th));
  Eigen::MatrixXcd H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      H(i, j) = (1.0 - w) * V(i, j).convert_to<double>() + (1.0 - std::conj(w)) * V(j, i).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

/// Cofactor (Laplace) expansion; exponential, for small matrices only.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const T term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) acc = acc + term;
    else acc = acc - term;
  }
  return acc;
}

/// ±t^k·a: the same up to units.
inline bool same_up_to_units(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const IntLaurent s = b.shifted(a.low() - b.low());
  return a == s || a == -s;
}

}  // namespace kt
