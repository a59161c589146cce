#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "knotconc/catalog.hpp"
#include "knotconc/surgery.hpp"
#include "support.hpp"

using namespace kt;

namespace {

// Gaussian elimination over Q; returns {rank, determinant (0 unless square
// and full rank)}.
std::pair<int, Rational> rational_rank_det(const IntMatrix& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = Rational(M(i, j));
  Rational det = 1;
  int rank = 0;
  for (Eigen::Index c = 0; c < n && rank < m; ++c) {
    auto r = static_cast<std::size_t>(rank);
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      det = -det;
    }
    det *= a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (Eigen::Index j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++rank;
  }
  if (m != n || rank < m) det = 0;
  return {rank, det};
}

IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n, int bound, bool symmetric) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  IntMatrix M(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) M(i, j) = coef(rng);
  if (symmetric)
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < i; ++j) M(i, j) = M(j, i);
  // Occasionally force a dependent row.
  if (m > 2 && rng() % 4 == 0) {
    M.row(m - 1) = M.row(0) * Integer(2) - M.row(1);
    if (symmetric) M.col(m - 1) = M.row(m - 1).transpose();
  }
  return M;
}

void check_snf(const IntMatrix& M) {
  const auto r = smith_normal_form<Integer>(M);
  CHECK(r.U * M * r.V == r.D);
  CHECK(abs(Integer(rational_rank_det(r.U).second.convert_to<Integer>())) == 1);
  CHECK(abs(Integer(rational_rank_det(r.V).second.convert_to<Integer>())) == 1);
  const Eigen::Index k = std::min(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < r.D.rows(); ++i)
    for (Eigen::Index j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(r.D(i, j) == 0);
  for (Eigen::Index i = 0; i < k; ++i) {
    CHECK(r.D(i, i) >= 0);
    if (i + 1 < k && r.D(i, i) != 0) CHECK(r.D(i + 1, i + 1) % r.D(i, i) == 0);
    if (i + 1 < k && r.D(i, i) == 0) CHECK(r.D(i + 1, i + 1) == 0);
  }
}

SurgeryPresentation from_matrix(const IntMatrix& L) {
  SurgeryPresentation s;
  s.name = "random";
  s.linking = L;
  for (Eigen::Index i = 0; i < L.rows(); ++i) {
    IntVector e = IntVector::Zero(L.rows());
    e(i) = 1;
    s.classes.emplace_back("m" + std::to_string(i), e);
  }
  return s;
}

SurgeryPresentation permuted(const SurgeryPresentation& s, const std::vector<int>& perm) {
  SurgeryPresentation t = s;
  const auto n = static_cast<Eigen::Index>(perm.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) t.linking(perm[i], perm[j]) = s.linking(i, j);
  for (auto& [name, v] : t.classes) {
    IntVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) w(perm[i]) = v(i);
    v = w;
  }
  t.components.clear();
  return t;
}

AbelianGroupDescription group(int rank, std::vector<long> torsion,
                              std::vector<std::pair<std::string, std::vector<long>>> images = {}) {
  AbelianGroupDescription g;
  g.rank = rank;
  for (long d : torsion) g.torsion.emplace_back(d);
  for (auto& [n, v] : images) {
    IntVector x(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = v[i];
    g.images.emplace_back(n, x);
  }
  return g;
}

std::string residual_of(const SurgeryPresentation& s, const char* a, const char* b, std::int64_t p) {
  try {
    cobordism_meridian_check(s, a, b, p);
  } catch (const ClassMismatch& e) {
    return e.residual();
  }
  return {};
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form<Integer>(int_matrix({{0}})).D == int_matrix({{0}}));
    CHECK(smith_normal_form<Integer>(int_matrix({{2, 0}, {0, 3}})).D == int_matrix({{1, 0}, {0, 6}}));
    for (long p : {2, 3, 5, 12}) {
      const auto r = smith_normal_form<Integer>(int_matrix({{0, p}, {p, 0}}));
      CHECK(r.D == int_matrix({{p, 0}, {0, p}}));
    }
    check_snf(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(smith_normal_form<Integer>(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).D ==
          int_matrix({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  }

  TEST_CASE("first homology examples") {
    SurgeryPresentation one = from_matrix(int_matrix({{0}}));
    const auto g1 = first_homology(one);
    CHECK(g1.rank == 1);
    CHECK(g1.torsion.empty());
    CHECK(abs(g1.image("m0")(0)) == 1);
    CHECK(g1.str() == "Z");

    const auto g2 = first_homology(from_matrix(int_matrix({{0, 0}, {0, 0}})));
    CHECK(g2.rank == 2);
    CHECK(g2.str() == "Z^2");

    const auto hopf = first_homology(from_matrix(int_matrix({{0, 1}, {1, 0}})));
    CHECK(hopf.rank == 0);
    CHECK(hopf.torsion.empty());
    CHECK(hopf.str() == "0");

    const auto lens = first_homology(from_matrix(int_matrix({{6}})));
    CHECK(lens.str() == "Z/6");
    CHECK(lens.element_str(lens.image("m0")) == "(1 mod 6)");
    CHECK(first_homology(from_matrix(int_matrix({{2, 0}, {0, 0}}))).str() == "Z + Z/2");
  }

  TEST_CASE("localize examples") {
    const auto g = localize(group(1, {6}, {{"x", {1, 5}}}), Integer(2));
    CHECK(g.str() == "Z + Z/3");
    CHECK(g.element_str(g.image("x")) == "(1; 2 mod 3)");
    for (long p : {1, 2, 7, 30}) CHECK(localize(group(1, {}), Integer(p)).str() == "Z");
    CHECK(localize(group(0, {8}), Integer(2)).str() == "0");
    CHECK(localize(group(0, {27}), Integer(6)).str() == "0");
    CHECK(localize(group(0, {2, 12}), Integer(3)) == group(0, {2, 4}));
    CHECK_THROWS_AS(localize(group(1, {}), Integer(0)), ValidationError);
  }

  TEST_CASE("meridian check on the winding model") {
    for (std::int64_t p : {1, 2, 3, 5, 9}) {
      const SurgeryPresentation s = winding_cobordism_model(p);
      // L·(0, 0, -1) = mu_K - p·mu_Ptilde, so the relation holds integrally.
      IntVector x = IntVector::Zero(3);
      x(2) = -1;
      CHECK(s.linking * x == s.tracked("mu_K") - Integer(p) * s.tracked("mu_Ptilde"));
      const MeridianCheck mc = cobordism_meridian_check(s, "mu_K", "mu_Ptilde", p);
      CHECK(mc.integral.str() == "Z");
      CHECK(mc.localized.str() == "Z");
      CHECK(mc.spans_free_summand);
      CHECK(abs(mc.mu0_image(0)) == p);
      CHECK(abs(mc.mu1_image(0)) == 1);
      CHECK(cobordism_meridian_check(s, "mu_K", "mu_PK", p).integral == mc.integral);
    }
    const Catalog cat = load_catalog(KNOTCONC_DEFAULT_CATALOG);
    const auto& hopf = cat.presentation("hopf-pair");
    const MeridianCheck h = cobordism_meridian_check(hopf, "mu0", "mu1", 1);
    CHECK(h.integral.str() == "0");
  }

  TEST_CASE("catalog presentations match the built-in model") {
    const Catalog cat = load_catalog(KNOTCONC_DEFAULT_CATALOG);
    for (std::int64_t p : {1, 2, 3, 5}) {
      const auto& s = cat.presentation("winding-" + std::to_string(p) + "-cobordism");
      CHECK(s.linking == winding_cobordism_model(p).linking);
      CHECK_NOTHROW(cobordism_meridian_check(s, "mu_K", "mu_Ptilde", p));
    }
  }

  TEST_CASE("class mismatch carries the residual") {
    const SurgeryPresentation s = winding_cobordism_model(2);
    CHECK_THROWS_AS(cobordism_meridian_check(s, "mu_K", "mu_Ptilde", 3), ClassMismatch);
    const std::string r = residual_of(s, "mu_K", "mu_Ptilde", 3);
    CHECK((r == "(1)" || r == "(-1)"));
    // Z/6 with mu0 = mu1 and p = 5: 1 - 5 = -4, which is 2 mod 6.
    SurgeryPresentation lens = from_matrix(int_matrix({{6}}));
    CHECK_THROWS_AS(cobordism_meridian_check(lens, "m0", "m0", 5), ClassMismatch);
    CHECK(residual_of(lens, "m0", "m0", 5) == "(2 mod 6)");
    CHECK_THROWS_AS(cobordism_meridian_check(s, "mu_K", "nope", 2), ValidationError);
    CHECK_THROWS_AS(cobordism_meridian_check(s, "mu_K", "mu_Ptilde", 0), ValidationError);
  }

  TEST_CASE("presentation parse and format round trip") {
    const SurgeryPresentation s = winding_cobordism_model(3);
    const SurgeryPresentation t = parse_presentation(format_presentation(s), s.name);
    CHECK(t.linking == s.linking);
    CHECK(t.components == s.components);
    CHECK(t.note == s.note);
    REQUIRE(t.classes.size() == s.classes.size());
    for (std::size_t k = 0; k < s.classes.size(); ++k) {
      CHECK(t.classes[k].first == s.classes[k].first);
      CHECK(t.classes[k].second == s.classes[k].second);
    }
    CHECK(format_presentation(t) == format_presentation(s));

    CHECK_THROWS_AS(parse_presentation("row 0 1\nrow 2 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_presentation("row 0 1\nrow 1 0\nclass a 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_presentation("row 0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("matrix 0\n"), ParseError);
  }

  TEST_CASE("property: smith normal form on 200 random matrices") {
    std::mt19937_64 rng(kSeed + 40);
    for (int n = 0; n < 200; ++n) {
      const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 8);
      const Eigen::Index cols = n % 3 == 0 ? rows : 1 + static_cast<Eigen::Index>(rng() % 8);
      const IntMatrix M = random_matrix(rng, rows, cols, 9, false);
      check_snf(M);
      const auto r = smith_normal_form<Integer>(M);
      int nonzero = 0;
      for (Eigen::Index i = 0; i < std::min(rows, cols); ++i) nonzero += r.D(i, i) != 0;
      CHECK(nonzero == rational_rank_det(M).first);
    }
  }

  TEST_CASE("property: rank and torsion of first homology") {
    std::mt19937_64 rng(kSeed + 41);
    for (int n = 0; n < 100; ++n) {
      const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % 5);
      const IntMatrix L = random_matrix(rng, k, k, 4, true);
      const auto g = first_homology(from_matrix(L));
      const auto [rank, det] = rational_rank_det(L);
      CHECK(g.rank == k - rank);
      for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        CHECK(g.torsion[i] >= 2);
        if (i + 1 < g.torsion.size()) CHECK(g.torsion[i + 1] % g.torsion[i] == 0);
      }
      if (rank == k) {
        std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(k), std::vector<Integer>(static_cast<std::size_t>(k)));
        for (Eigen::Index i = 0; i < k; ++i)
          for (Eigen::Index j = 0; j < k; ++j) rows[i][j] = L(i, j);
        const Integer prod = std::accumulate(g.torsion.begin(), g.torsion.end(), Integer(1),
                                             [](const Integer& a, const Integer& b) { return Integer(a * b); });
        CHECK(prod == abs(cofactor_det(rows)));
      }
    }
  }

  TEST_CASE("property: meridian check is invariant under relabeling") {
    std::mt19937_64 rng(kSeed + 42);
    for (int n = 0; n < 60; ++n) {
      const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 7);
      const SurgeryPresentation s = winding_cobordism_model(p);
      std::vector<int> perm = {0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      const SurgeryPresentation t = permuted(s, perm);
      const MeridianCheck a = cobordism_meridian_check(s, "mu_K", "mu_Ptilde", p);
      const MeridianCheck b = cobordism_meridian_check(t, "mu_K", "mu_Ptilde", p);
      CHECK(a.integral.str() == b.integral.str());
      CHECK(a.localized.str() == b.localized.str());
      CHECK(a.spans_free_summand == b.spans_free_summand);
      const std::int64_t wrong = p + 1;
      CHECK(residual_of(s, "mu_K", "mu_Ptilde", wrong).empty() == residual_of(t, "mu_K", "mu_Ptilde", wrong).empty());
    }
    for (int n = 0; n < 60; ++n) {
      const Eigen::Index k = 2 + static_cast<Eigen::Index>(rng() % 4);
      const SurgeryPresentation s = from_matrix(random_matrix(rng, k, k, 4, true));
      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const SurgeryPresentation t = permuted(s, perm);
      CHECK(first_homology(s).str() == first_homology(t).str());
      const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 4);
      CHECK(residual_of(s, "m0", "m1", p).empty() == residual_of(t, "m0", "m1", p).empty());
    }
  }

  TEST_CASE("property: localize is idempotent") {
    std::mt19937_64 rng(kSeed + 43);
    for (int n = 0; n < 100; ++n) {
      const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % 5);
      const auto g = first_homology(from_matrix(random_matrix(rng, k, k, 6, true)));
      const Integer p(1 + static_cast<long>(rng() % 12));
      const auto once = localize(g, p);
      CHECK(localize(once, p) == once);
      CHECK(once.rank == g.rank);
      for (const auto& d : once.torsion) CHECK(gcd(d, p) == 1);
    }
  }
}
