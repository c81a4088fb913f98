#pragma once

#include <cstddef>
#include <vector>

#include "liecert/liealg.hpp"

namespace liecert {

/// [[0, I_n], [-I_n, 0]]: the form preserved by sp(n).
Matrix symplectic_j(std::size_t n);
/// [[0, I_m], [I_m, 0]]: the split form preserved by so(m, m).
Matrix split_orthogonal_j(std::size_t m);

/// True iff X^T J + J X = 0.
bool preserves_form(const Matrix& x, const Matrix& j);

/// sp(n) as 2n x 2n matrices [[A, B], [C, -A^T]] with B, C symmetric.
///
/// Basis order: diag(E_ij, -E_ji) for all (i, j) lexicographically, then the
/// B-block generators E_ij + E_ji (E_ii on the diagonal) for i <= j, then the
/// C-block generators in the same order. Dimension n(2n+1).
MatLieAlgebra sp_algebra(std::size_t n);

/// so(m, m) in split coordinates: [[A, B], [C, -A^T]] with B, C skew.
/// Basis: A-block as for sp, then E_ij - E_ji (i < j) in B, then in C.
MatLieAlgebra so_split_algebra(std::size_t m);

/// Off-diagonal E_ij (lexicographic) followed by E_ii - E_{i+1,i+1}.
MatLieAlgebra sl_algebra(std::size_t m);
MatLieAlgebra gl_algebra(std::size_t m);

/// Block-diagonal direct sum; the basis is a's basis followed by b's.
MatLieAlgebra direct_sum(const MatLieAlgebra& a, const MatLieAlgebra& b);

struct RootVector {
  Matrix vector;
  std::vector<int> root; // coordinates against cartan_basis
};

/// Split Cartan subalgebra with positive root vectors, for a product of
/// type-C factors.
struct RootDatum {
  std::vector<Matrix> cartan_basis;
  std::vector<RootVector> positive_roots;
  std::vector<std::size_t> simple_roots; // indices into positive_roots
  std::vector<int> rho;
  std::vector<std::size_t> factor_ranks; // one entry per simple factor

  [[nodiscard]] std::size_t rank() const { return cartan_basis.size(); }
};

/// Standard C_n data in epsilon coordinates: h_k = diag(E_kk, -E_kk), roots
/// e_i - e_j and e_i + e_j (i < j), 2 e_i; simple roots e_i - e_{i+1}, 2 e_n.
RootDatum sp_root_datum(std::size_t n);

/// Data for the block-diagonal direct sum, with concatenated weights.
RootDatum direct_sum_root_datum(const RootDatum& a, std::size_t ambient_a, const RootDatum& b, std::size_t ambient_b);

/// Empty when the datum is consistent; otherwise a description of the first
/// failure (non-commuting Cartan elements or a wrong eigenvalue).
std::string validate_root_datum(const RootDatum& rd);

} // namespace liecert
