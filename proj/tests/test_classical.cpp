#include <doctest.h>

#include "liecert/classical.hpp"

using namespace liecert;

TEST_CASE("dimensions") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(sp_algebra(n).dim() == n * (2 * n + 1));
    CHECK(so_split_algebra(2 * n).dim() == 2 * n * (4 * n - 1));
    CHECK(sl_algebra(n + 1).dim() == (n + 1) * (n + 1) - 1);
    CHECK(gl_algebra(n).dim() == n * n);
  }
  CHECK(sp_algebra(3).dim() == 21);
  CHECK(so_split_algebra(6).dim() == 66);
  CHECK(so_split_algebra(10).dim() == 190);
  CHECK_THROWS_AS(sp_algebra(0), std::invalid_argument);
}

TEST_CASE("defining relations hold on every basis element") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Matrix js = symplectic_j(n);
    const MatLieAlgebra sp = sp_algebra(n);
    for (const auto& x : sp.basis()) CHECK(preserves_form(x, js));
    const Matrix jo = split_orthogonal_j(2 * n);
    const MatLieAlgebra so = so_split_algebra(2 * n);
    for (const auto& x : so.basis()) CHECK(preserves_form(x, jo));
  }
  CHECK_FALSE(preserves_form(Matrix::identity(2), symplectic_j(1)));
  CHECK_FALSE(preserves_form(Matrix{{0, 1}, {0, 0}}, split_orthogonal_j(1)));
}

TEST_CASE("sp(1) basis order is h, e, f") {
  const MatLieAlgebra sp1 = sp_algebra(1);
  const auto& b = sp1.basis();
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Matrix{{1, 0}, {0, -1}});
  CHECK(b[1] == Matrix{{0, 1}, {0, 0}});
  CHECK(b[2] == Matrix{{0, 0}, {1, 0}});
}

TEST_CASE("direct sum is block diagonal") {
  const MatLieAlgebra s = direct_sum(sp_algebra(2), sp_algebra(1));
  CHECK(s.dim() == 13);
  CHECK(s.ambient_size() == 6);
  CHECK(s.name() == "sp(2)+sp(1)");
  for (std::size_t i = 0; i < 10; ++i) CHECK(s.basis(i).block(4, 4, 2, 2).is_zero());
  for (std::size_t i = 10; i < 13; ++i) CHECK(s.basis(i).block(0, 0, 4, 4).is_zero());
}

TEST_CASE("C_n root data") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const RootDatum rd = sp_root_datum(n);
    CHECK(validate_root_datum(rd).empty());
    CHECK(rd.rank() == n);
    CHECK(rd.positive_roots.size() == n * n);
    CHECK(rd.simple_roots.size() == n);
    std::vector<int> rho(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = static_cast<int>(n - i);
    CHECK(rd.rho == rho);
    // The last simple root is 2 e_n.
    std::vector<int> last(n, 0);
    last[n - 1] = 2;
    CHECK(rd.positive_roots[rd.simple_roots.back()].root == last);
  }
  const RootDatum sum = direct_sum_root_datum(sp_root_datum(2), 4, sp_root_datum(1), 2);
  CHECK(validate_root_datum(sum).empty());
  CHECK(sum.rank() == 3);
  CHECK(sum.positive_roots.size() == 5);
  CHECK(sum.factor_ranks == std::vector<std::size_t>{2, 1});
}

TEST_CASE("validate_root_datum flags a wrong eigenvalue") {
  RootDatum rd = sp_root_datum(2);
  rd.positive_roots[0].root[0] += 1;
  CHECK_FALSE(validate_root_datum(rd).empty());
}
