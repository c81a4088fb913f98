#include <doctest.h>

#include <random>

#include "liecert/exactmat.hpp"

using namespace liecert;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 4, double density = 0.6) {
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = Rational(val(rng), std::uniform_int_distribution<int>(1, 3)(rng));
  return m;
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  Matrix m = random_matrix(rng, n, n);
  return m + m.transpose();
}

/// Low-rank symmetric matrix: A^T diag(+-1, 0) A.
Matrix random_degenerate_symmetric(std::mt19937_64& rng, std::size_t n) {
  const Matrix a = random_matrix(rng, n, n);
  Matrix d(n, n);
  std::uniform_int_distribution<int> pick(-1, 1);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = pick(rng);
  return a.transpose() * d * a;
}

} // namespace

TEST_CASE("basic matrix algebra") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(a.trace() == Rational(5));
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a * a == Matrix{{7, 10}, {15, 22}});
  CHECK((a - a).is_zero());
  CHECK(Matrix{{1, 2}, {2, 1}}.is_symmetric());
  CHECK(Matrix{{0, 2}, {-2, 0}}.is_skew());
  CHECK(block_diagonal(a, Matrix{{5}}).block(2, 2, 1, 1) == Matrix{{5}});
  CHECK(elementary(2, 3, 1, 2)(1, 2) == Rational(1));
  CHECK(a * Vector{1, 1} == Vector{3, 7});
  CHECK(Matrix::unflatten(2, 2, a.flat()) == a);
}

TEST_CASE("rref, rank and kernel") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
}

TEST_CASE("solve_linear distinguishes mismatch from no solution") {
  const Matrix a{{1, 1}, {2, 2}};
  CHECK_THROWS_AS((void)solve_linear(a, Vector{1, 2, 3}), std::invalid_argument);
  CHECK_FALSE(solve_linear(a, Vector{1, 3}).has_value());
  const auto x = solve_linear(a, Vector{2, 4});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vector{2, 4});
}

TEST_CASE("inverse") {
  const Matrix a{{2, 1}, {1, 1}};
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("signature of small forms") {
  CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature(Matrix{{1, 0}, {0, 0}}) == Signature{1, 0, 1});
  CHECK(signature(Matrix(3, 3)) == Signature{0, 0, 3});
  CHECK(signature(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}) == Signature{1, 2, 0});
  CHECK(Signature{2, 2, 0}.to_string() == "(2,2,0)");
  CHECK_THROWS_AS(congruent_diagonalize(Matrix{{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("property: rref is idempotent and kernel vectors are annihilated (200 random)") {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = random_matrix(rng, size(rng), size(rng));
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    CHECK(twice.rank == once.rank);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() + once.rank == m.cols());
    for (const auto& v : ker) CHECK(is_zero(m * v));
  }
}

TEST_CASE("property: P^T S P = D with P invertible (200 random, size <= 20)") {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const Matrix s = trial % 3 == 0 ? random_degenerate_symmetric(rng, n) : random_symmetric(rng, n);
    const auto c = congruent_diagonalize(s);
    CHECK(c.diagonal.is_diagonal());
    CHECK(c.transform.transpose() * s * c.transform == c.diagonal);
    CHECK(inverse(c.transform).has_value());
  }
}

TEST_CASE("property: signature is a congruence invariant (100 random)") {
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const Matrix s = trial % 2 ? random_degenerate_symmetric(rng, n) : random_symmetric(rng, n);
    Matrix p = random_matrix(rng, n, n, 3, 0.8);
    while (!inverse(p)) p += Matrix::identity(n);
    const Signature a = signature(s);
    CHECK(a.positive + a.negative + a.null == n);
    CHECK(a.positive + a.negative == rank(s));
    CHECK(signature(p.transpose() * s * p) == a);
  }
}

TEST_CASE("restrict_to_kernel finds a commutant") {
  const Matrix x{{1, 1}, {0, 1}};
  std::vector<Matrix> candidates;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) candidates.push_back(elementary(2, 2, i, j));
  const auto c = restrict_to_kernel(candidates, 1, [&](const Matrix& t, std::size_t) { return t * x - x * t; });
  CHECK(c.size() == 2);
  for (const auto& t : c) CHECK((t * x - x * t).is_zero());
}
