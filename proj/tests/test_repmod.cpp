#include <doctest.h>

#include <map>
#include <random>

#include "liecert/repmod.hpp"

using namespace liecert;

namespace {

using WeightCount = std::map<std::vector<int>, std::size_t>;

/// Weights of R^{4n} = R^{2n} + R^{2n} under sp(n): +-e_i, each twice.
std::vector<std::vector<int>> doubled_standard_weights(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (int copy = 0; copy < 2; ++copy)
    for (int s : {1, -1})
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> w(n, 0);
        w[i] = s;
        out.push_back(w);
      }
  return out;
}

/// Weights of wedge^2 R^{4n}: sums over unordered pairs of distinct basis vectors.
WeightCount wedge2_weights(std::size_t n) {
  const auto base = doubled_standard_weights(n);
  WeightCount out;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      std::vector<int> w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = base[a][k] + base[b][k];
      ++out[w];
    }
  return out;
}

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> val(-3, 3);
  Vector v(d);
  for (auto& x : v) x = val(rng);
  return v;
}

} // namespace

TEST_CASE("Representation validates the homomorphism property") {
  const MatLieAlgebra sp1 = sp_algebra(1);
  CHECK_NOTHROW(Representation(sp1, sp1.basis()));
  CHECK_THROWS_AS(Representation(sp1, {sp1.basis(0), sp1.basis(2), sp1.basis(1)}), std::invalid_argument);
  CHECK_THROWS_AS(Representation(sp1, {sp1.basis(0)}), std::invalid_argument);
}

TEST_CASE("standard, trivial, adjoint and direct sums") {
  const MatLieAlgebra sp2 = sp_algebra(2);
  CHECK(standard_representation(sp2).degree() == 4);
  CHECK(trivial_representation(sp2, 3).degree() == 3);
  CHECK(adjoint_representation(sp2).degree() == 10);
  const auto v = standard_representation(sp2);
  CHECK(direct_sum(v, v).degree() == 8);
  CHECK(v.act(sp2.basis(3)) == sp2.basis(3));
  CHECK_THROWS_AS(direct_sum(v, standard_representation(sp_algebra(1))), std::invalid_argument);
}

TEST_CASE("commutant dimensions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto v = standard_representation(sp_algebra(n));
    CHECK(commutant_dimension(v) == 1);
    CHECK(commutant_dimension(direct_sum(v, v)) == 4);
    CHECK(commutant_dimension(direct_sum(v, trivial_representation(sp_algebra(n), 2))) == 5);
  }
}

TEST_CASE("weights of so(2n,2n) under sp(n) match the wedge^2 oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto rep = restriction_representation(so_split_algebra(2 * n), embed_sp_in_so(n), ActionKind::adjoint);
    const auto wd = weight_decomposition(rep, sp_root_datum(n));
    const WeightCount oracle = wedge2_weights(n);
    WeightCount got;
    for (const auto& s : wd.spaces) got[s.weight] = s.multiplicity;
    CHECK(got == oracle);
    CHECK(wd.total == 2 * n * (4 * n - 1));
    CHECK(wd.multiplicity_of(std::vector<int>(n, 0)) == oracle.at(std::vector<int>(n, 0)));
    CHECK(wd.multiplicity_of(std::vector<int>(n, 0)) == 4 * n);
  }
  CHECK(wedge2_weights(3).at({0, 0, 0}) == 12);
}

TEST_CASE("adjoint so(2n,2n) under sp(n) is sp(n) + 3 pi_2 + 3 trivial") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto rep = restriction_representation(so_split_algebra(2 * n), embed_sp_in_so(n), ActionKind::adjoint);
    const auto got = decompose(rep, sp_root_datum(n));
    std::vector<int> adj(n, 0), zero(n, 0);
    adj[0] = 2;
    const std::vector<IrreducibleSummand> want{
        {adj, 1, n * (2 * n + 1)}, {fundamental_weight(n, 2), 3, n * (2 * n - 1) - 1}, {zero, 3, 1}};
    CHECK(got == want);
  }
}

TEST_CASE("standard module decompositions and irreducibility") {
  const std::size_t n = 2;
  const auto rd = direct_sum_root_datum(sp_root_datum(n), 2 * n, sp_root_datum(1), 2);
  const auto rep = restriction_representation(so_split_algebra(2 * n), embed_sp_sp1_in_so(n), ActionKind::standard);
  const auto ev = irreducibility_certificate(rep, rd);
  CHECK(ev.irreducible);
  CHECK(ev.commutant_dim == 1);
  REQUIRE(ev.summands.size() == 1);
  CHECK(ev.summands[0].highest_weight == std::vector<int>{1, 0, 1});
  CHECK(ev.summands[0].dim_each == 8);

  const auto two = restriction_representation(so_split_algebra(2 * n), embed_sp_in_so(n), ActionKind::standard);
  const auto ev2 = irreducibility_certificate(two, sp_root_datum(n));
  CHECK_FALSE(ev2.irreducible);
  CHECK(ev2.commutant_dim == 4);
}

TEST_CASE("subspace representation requires an invariant subspace") {
  const SymmetricSplit s = symmetric_split(1);
  CHECK(subspace_representation(s.parent, s.embedding, s.complement).degree() == 4);
  CHECK_THROWS_AS(subspace_representation(s.parent, s.embedding, {s.complement[0]}), std::invalid_argument);
}

TEST_CASE("invariant bilinear forms") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto v = standard_representation(sp_algebra(n));
    CHECK(invariant_bilinear_forms(v, FormSymmetry::symmetric).empty());
    const auto skew = invariant_bilinear_forms(v, FormSymmetry::skew);
    REQUIRE(skew.size() == 1);
    CHECK(SpanBasis(std::vector<Matrix>{skew[0], symplectic_j(n)}).rank() == 1);
    const auto sym2 = invariant_bilinear_forms(direct_sum(v, v), FormSymmetry::symmetric);
    REQUIRE(sym2.size() == 1);
    CHECK(signature(sym2[0]) == Signature{2 * n, 2 * n, 0});
  }
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(4, fundamental_weight(4, 2)) == 27);
  CHECK(weyl_dim(4, fundamental_weight(4, 3)) == 48);
  CHECK(weyl_dim(4, fundamental_weight(4, 4)) == 42);
  CHECK(weyl_dim(3, {2, 0, 0}) == 21);
  CHECK(weyl_dim(3, {0, 0, 0}) == 1);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t j = 1; j <= n; ++j) CHECK(weyl_dim(n, fundamental_weight(n, j)) == fundamental_dim_binomial(n, j));
  CHECK_THROWS_AS(weyl_dim(3, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(3, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_dim_binomial(3, 4), std::invalid_argument);
  const auto rd = direct_sum_root_datum(sp_root_datum(2), 4, sp_root_datum(1), 2);
  CHECK(weyl_dim(rd, {1, 0, 1}) == 8);
}

TEST_CASE("fundamental dimensions exceed 4n") {
  const auto v = lemma_4n_audit(4);
  REQUIRE(v.size() == 3);
  CHECK(v[0].dimension == 27);
  CHECK(v[1].dimension == 48);
  CHECK(v[2].dimension == 42);
  for (const auto& x : v) CHECK(x.pass);
  CHECK_THROWS_AS(lemma_4n_audit(2), std::invalid_argument);
}

TEST_CASE("minimal orthogonal audit") {
  const auto r = minimal_orthogonal_audit(3);
  CHECK(r.pass());
  CHECK(r.minimal_dimension == 12);
  CHECK(r.standard_symmetric_forms == 0);
  CHECK(r.standard_skew_forms == 1);
  CHECK(r.padded.size() == 6);
  for (const auto& p : r.padded) {
    CHECK(p.common_radical > 0);
    CHECK_FALSE(p.admits_nondegenerate);
  }
  CHECK(r.double_standard_signature == Signature{6, 6, 0});
  CHECK_THROWS_AS(minimal_orthogonal_audit(2), std::invalid_argument);
}

TEST_CASE("wedge^2 images lie in so and span it") {
  const std::size_t m = 2;
  const Matrix b = split_orthogonal_j(m);
  const auto images = wedge2_to_so(2 * m, b);
  CHECK(images.size() == 6);
  const MatLieAlgebra so = so_split_algebra(m);
  std::vector<Matrix> mats;
  for (const auto& w : images) {
    CHECK(so.contains(w.image));
    mats.push_back(w.image);
  }
  CHECK(SpanBasis(mats).rank() == 6);
  CHECK_THROWS_AS(wedge2_to_so(2, Matrix{{0, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(wedge2_to_so(2, Matrix{{1, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("property: wedge^2 map is equivariant (200 random)") {
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const std::size_t d = 2 * m;
    const Matrix b = split_orthogonal_j(m);
    const MatLieAlgebra so = so_split_algebra(m);
    const Matrix x = so.element(random_vector(rng, so.dim()));
    const Vector u = random_vector(rng, d), v = random_vector(rng, d);
    const Matrix lhs = bracket(x, wedge2_image(b, u, v));
    const Matrix rhs = wedge2_image(b, x * u, v) + wedge2_image(b, u, x * v);
    CHECK(lhs == rhs);
  }
}
