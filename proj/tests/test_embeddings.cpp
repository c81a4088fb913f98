#include <doctest.h>

#include "liecert/embeddings.hpp"

using namespace liecert;

namespace {

/// First nonzero ratio lhs/rhs, requiring lhs = ratio * rhs everywhere.
std::optional<Rational> proportional(const Matrix& lhs, const Matrix& rhs) {
  std::optional<Rational> s;
  for (std::size_t i = 0; i < rhs.rows() && !s; ++i)
    for (std::size_t j = 0; j < rhs.cols() && !s; ++j)
      if (!rhs(i, j).is_zero()) s = lhs(i, j) / rhs(i, j);
  if (!s || lhs != rhs * *s) return std::nullopt;
  return s;
}

Matrix trace_gram(const std::vector<Matrix>& xs) {
  Matrix g(xs.size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) g(i, j) = (xs[i] * xs[j]).trace();
  return g;
}

} // namespace

TEST_CASE("embedding certificates for n = 1..4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Embedding a = embed_sp_in_so(n);
    const Embedding b = embed_sp_sp1_in_so(n);
    const Embedding c = embed_sp_sp1_in_sp_succ(n);
    CHECK(a.certificate.ok);
    CHECK(b.certificate.ok);
    CHECK(c.certificate.ok);
    CHECK(a.defining_relation_violation() == -1);
    CHECK(b.factor_dims == std::vector<std::size_t>{n * (2 * n + 1), 3});
    CHECK(b.factor_images(0) == a.images());
    for (const auto& x : b.factor_images(0))
      for (const auto& y : b.factor_images(1)) CHECK(bracket(x, y).is_zero());
    for (const auto& x : c.factor_images(0))
      for (const auto& y : c.factor_images(1)) CHECK(bracket(x, y).is_zero());
  }
}

TEST_CASE("sp(n) block image is diag(M, -M^T)") {
  const Embedding e = embed_sp_in_so(2);
  const auto& sp = e.source();
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const Matrix& m = sp.basis(i);
    const Matrix& x = e.images()[i];
    CHECK(x.block(0, 0, 4, 4) == m);
    CHECK(x.block(0, 4, 4, 4).is_zero());
    CHECK(x.block(4, 0, 4, 4).is_zero());
    CHECK(x.block(4, 4, 4, 4) == -m.transpose());
  }
}

TEST_CASE("W0 block pattern") {
  const Matrix w = w0_element(1, 1, 2, 3);
  CHECK(w == Matrix{{1, 0, 0, 2}, {0, 1, -2, 0}, {0, -3, -1, 0}, {3, 0, 0, -1}});
  for (std::size_t n = 1; n <= 3; ++n) {
    const Embedding e = embed_sp_in_so(n);
    const Matrix x = w0_element(n, 5, -2, 7);
    CHECK(preserves_form(x, split_orthogonal_j(2 * n)));
    for (const auto& y : e.images()) CHECK(bracket(x, y).is_zero());
  }
  CHECK(spans_w0_family(2, {w0_element(2, 1, 1, 0), w0_element(2, 0, 1, 1), w0_element(2, 1, 0, 1)}));
  CHECK_FALSE(spans_w0_family(2, {w0_element(2, 1, 0, 0), w0_element(2, 0, 1, 0)}));
  CHECK_FALSE(spans_w0_family(1, {w0_element(1, 1, 0, 0), w0_element(1, 0, 1, 0), Matrix::identity(4)}));
}

TEST_CASE("defining relation violation is reported") {
  Embedding e = embed_sp_in_so(1);
  e.target_form = Matrix::identity(4);
  CHECK(e.defining_relation_violation() >= 0);
}

TEST_CASE("symmetric split of sp(n+1)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const SymmetricSplit s = symmetric_split(n);
    CHECK(s.complement.size() == 4 * n);
    CHECK(s.pair.certificate.ok);
    CHECK(s.pair.complement_brackets_span_subalgebra);
    CHECK(s.parent_basis_recovered);
    CHECK(s.complement_signature == Signature{2 * n, 2 * n, 0});
  }
}

TEST_CASE("Schur constants agree with the trace-form oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const SchurConstants s = schur_constants(n);
    REQUIRE(s.cross_terms_zero.ok);
    REQUIRE(s.proportionality.ok);
    CHECK(s.a_n == Rational(static_cast<std::int64_t>(2 * n + 4), static_cast<std::int64_t>(2 * n + 2)));
    CHECK(s.a_1 == Rational(static_cast<std::int64_t>(2 * n + 4), 4));

    // K_{n+1} = (2n+4) tr on sp(n+1); the inclusion preserves tr.
    const Embedding e = embed_sp_sp1_in_sp_succ(n);
    const Rational c_big(static_cast<std::int64_t>(2 * n + 4));
    const auto an = proportional(trace_gram(e.factor_images(0)) * c_big, killing_form(sp_algebra(n)).gram);
    const auto a1 = proportional(trace_gram(e.factor_images(1)) * c_big, killing_form(sp_algebra(1)).gram);
    REQUIRE(an.has_value());
    REQUIRE(a1.has_value());
    CHECK(*an == s.a_n);
    CHECK(*a1 == s.a_1);

    const SymmetricSplit split = symmetric_split(n);
    const auto a0 = proportional(trace_gram(split.complement) * c_big, s.reference_form);
    REQUIRE(a0.has_value());
    CHECK(*a0 == s.a_0);
  }
}
