#include <doctest.h>

#include <random>

#include "liecert/classical.hpp"
#include "liecert/liealg.hpp"

using namespace liecert;

namespace {

/// Killing form from explicit ad matrices: K_ij = tr(ad b_i ad b_j).
Matrix killing_via_ad(const MatLieAlgebra& l) {
  const std::size_t d = l.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = l.coordinates(bracket(l.basis(i), l.basis(j)));
      REQUIRE(c.has_value());
      for (std::size_t k = 0; k < d; ++k) a(k, j) = (*c)[k];
    }
    ad.push_back(std::move(a));
  }
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = (ad[i] * ad[j]).trace();
  return g;
}

Matrix random_element(const MatLieAlgebra& l, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-3, 3);
  Vector c(l.dim());
  for (auto& x : c) x = val(rng);
  return l.element(c);
}

} // namespace

TEST_CASE("bracket") {
  const Matrix e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}}, h{{1, 0}, {0, -1}};
  CHECK(bracket(e, f) == h);
  CHECK(bracket(h, e) == e * Rational(2));
  CHECK_THROWS_AS(bracket(e, Matrix::identity(3)), std::invalid_argument);
}

TEST_CASE("SpanBasis coordinates") {
  const SpanBasis s(std::vector<Vector>{{1, 1, 0}, {0, 1, 1}});
  CHECK(s.rank() == 2);
  CHECK(s.independent());
  const auto c = s.coordinates(Vector{2, 5, 3});
  REQUIRE(c.has_value());
  CHECK(*c == Vector{2, 3});
  CHECK_FALSE(s.contains(Vector{1, 0, 0}));
  CHECK_THROWS(SpanBasis(std::vector<Vector>{{1, 2}, {1}}));
}

TEST_CASE("MatLieAlgebra rejects dependent or misshapen bases") {
  const Matrix e{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(MatLieAlgebra("bad", 2, {e, e * Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(MatLieAlgebra("bad", 3, {e}), std::invalid_argument);
}

TEST_CASE("structure constants of sl(2)") {
  const MatLieAlgebra l = sp_algebra(1); // h, e, f
  const auto& sc = l.structure_constants();
  CHECK(sc.at(0, 1, 1) == Rational(2));
  CHECK(sc.at(0, 2, 2) == Rational(-2));
  CHECK(sc.at(1, 2, 0) == Rational(1));
  CHECK(sc.at(1, 0, 1) == Rational(-2));
  CHECK_FALSE(find_antisymmetry_violation(sc).has_value());
  CHECK_FALSE(find_jacobi_violation(sc).has_value());
}

TEST_CASE("non-closed span raises ClosureError") {
  const Matrix e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
  const MatLieAlgebra l("ef", 2, {e, f});
  CHECK_THROWS_AS((void)l.structure_constants(), ClosureError);
}

TEST_CASE("property: Jacobi on 1000 random triples for every constructed algebra") {
  std::mt19937_64 rng(4004);
  std::vector<MatLieAlgebra> algebras;
  for (std::size_t n = 1; n <= 5; ++n) algebras.push_back(sp_algebra(n));
  for (std::size_t m = 2; m <= 10; m += 2) algebras.push_back(so_split_algebra(m));
  algebras.push_back(sl_algebra(4));
  algebras.push_back(gl_algebra(3));
  algebras.push_back(direct_sum(sp_algebra(3), sp_algebra(1)));
  for (const auto& l : algebras) {
    CAPTURE(l.name());
    std::mt19937_64 local(rng());
    CHECK_FALSE(find_jacobi_violation(l.structure_constants(), 1000, local).has_value());
    CHECK_FALSE(find_antisymmetry_violation(l.structure_constants()).has_value());
    // Matrix-level oracle on random elements.
    for (int t = 0; t < 20; ++t) {
      const Matrix x = random_element(l, rng), y = random_element(l, rng), z = random_element(l, rng);
      CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    }
  }
}

TEST_CASE("Killing form matches the ad-matrix oracle and (2n+2) tr on sp(n)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const MatLieAlgebra l = sp_algebra(n);
    const Matrix k = killing_form(l).gram;
    CHECK(k == killing_via_ad(l));
    CHECK(k == trace_form(l).gram * Rational(static_cast<std::int64_t>(2 * n + 2)));
    CHECK_FALSE(find_ad_invariance_violation(killing_form(l)).has_value());
  }
  const MatLieAlgebra so = so_split_algebra(3);
  CHECK(killing_form(so).gram == killing_via_ad(so));
  // so(m,m) acting on R^{2m}: K = (2m - 2) tr.
  CHECK(killing_form(so).gram == trace_form(so).gram * Rational(4));
}

TEST_CASE("AlgebraForm evaluation and restriction") {
  const MatLieAlgebra l = sp_algebra(1);
  const AlgebraForm k = killing_form(l);
  CHECK(k.evaluate(l.basis(0), l.basis(0)) == Rational(8));
  CHECK(k.evaluate(l.basis(1), l.basis(2)) == Rational(4));
  CHECK(k.restricted_to({l.basis(1), l.basis(2)}) == Matrix{{0, 4}, {4, 0}});
  CHECK_THROWS_AS((void)k.evaluate(Matrix::identity(2), l.basis(0)), std::invalid_argument);
}

TEST_CASE("centralizers") {
  const MatLieAlgebra gl2 = gl_algebra(2);
  const auto c = centralizer_in(gl2, sl_algebra(2).basis());
  REQUIRE(c.size() == 1);
  CHECK(SpanBasis(std::vector<Matrix>{c[0], Matrix::identity(2)}).rank() == 1);
  CHECK(centralizer_in(sp_algebra(2), sp_algebra(2).basis()).empty());
  CHECK(centralizer_in(gl2, {}).size() == 4);
}

TEST_CASE("certify_homomorphism accepts the identity and reports each failure kind") {
  const MatLieAlgebra sp1 = sp_algebra(1);
  const MatLieAlgebra sl2 = sl_algebra(2);
  const Matrix h = sp1.basis(0), e = sp1.basis(1), f = sp1.basis(2);

  CHECK(certify_homomorphism({sp1, sl2, {h, e, f}}).ok);

  auto kind = [&](std::vector<Matrix> images, const MatLieAlgebra& target) {
    const auto c = certify_homomorphism({sp1, target, std::move(images)});
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.counterexample.has_value());
    return c.counterexample->kind;
  };
  CHECK(kind({h, e}, sl2) == "shape");
  CHECK(kind({h, e, Matrix::identity(2)}, sl2) == "span");
  CHECK(kind({h, f, e}, sl2) == "bracket");
  CHECK(kind({Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)}, sl2) == "injectivity");
}

TEST_CASE("symmetric pairs") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pc = symmetric_pair_check(sl_algebra(2 * n), sp_algebra(n).basis());
    CHECK(pc.certificate.ok);
    CHECK(pc.complement.size() == n * (2 * n - 1) - 1);
  }
  // Cartan of sl(3): Killing-nondegenerate, but root vectors bracket outside it.
  const MatLieAlgebra sl3 = sl_algebra(3);
  const std::vector<Matrix> cartan{sl3.basis(6), sl3.basis(7)};
  const auto pc = symmetric_pair_check(sl3, cartan);
  CHECK_FALSE(pc.certificate.ok);
  REQUIRE(pc.certificate.counterexample.has_value());
  CHECK(pc.certificate.counterexample->kind == "[m,m]");
  // A nilpotent line is Killing-isotropic.
  CHECK_THROWS_AS(killing_orthogonal_complement(sl3, {sl3.basis(0)}), DegenerateRestrictionError);
  CHECK(killing_orthogonal_complement(sl3, {}).size() == 8);
}

TEST_CASE("default-constructed algebra is the zero algebra") {
  const MatLieAlgebra l;
  CHECK(l.dim() == 0);
  CHECK(l.basis().empty());
  CHECK(l.name().empty());
}
