#include "liecert/classical.hpp"

#include <stdexcept>
#include <string>

namespace liecert {

namespace {

void require_positive(std::size_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": rank must be at least 1");
}

/// [[A, 0], [0, -A^T]] for A = E_ij.
Matrix gl_block(std::size_t n, std::size_t i, std::size_t j) {
  Matrix x(2 * n, 2 * n);
  x(i, j) = 1;
  x(n + j, n + i) = -1;
  return x;
}

/// Symmetric (sign = +1) or skew (sign = -1) generator in the block at
/// (row0, col0): E_ij + sign * E_ji.
Matrix off_block(std::size_t n, std::size_t row0, std::size_t col0, std::size_t i, std::size_t j, int sign) {
  Matrix x(2 * n, 2 * n);
  x(row0 + i, col0 + j) = 1;
  if (i != j) x(row0 + j, col0 + i) = sign;
  return x;
}

std::string name_with(const char* stem, std::size_t n) { return std::string(stem) + "(" + std::to_string(n) + ")"; }

} // namespace

Matrix symplectic_j(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

Matrix split_orthogonal_j(std::size_t m) {
  Matrix j(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = 1;
  }
  return j;
}

bool preserves_form(const Matrix& x, const Matrix& j) { return (x.transpose() * j + j * x).is_zero(); }

MatLieAlgebra sp_algebra(std::size_t n) {
  require_positive(n, "sp_algebra");
  std::vector<Matrix> basis;
  basis.reserve(n * (2 * n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(gl_block(n, i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.push_back(off_block(n, 0, n, i, j, +1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.push_back(off_block(n, n, 0, i, j, +1));
  return {name_with("sp", n), 2 * n, std::move(basis)};
}

MatLieAlgebra so_split_algebra(std::size_t m) {
  require_positive(m, "so_split_algebra");
  std::vector<Matrix> basis;
  basis.reserve(m * (2 * m - 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) basis.push_back(gl_block(m, i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) basis.push_back(off_block(m, 0, m, i, j, -1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) basis.push_back(off_block(m, m, 0, i, j, -1));
  return {"so(" + std::to_string(m) + "," + std::to_string(m) + ")", 2 * m, std::move(basis)};
}

MatLieAlgebra sl_algebra(std::size_t m) {
  require_positive(m, "sl_algebra");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) basis.push_back(elementary(m, m, i, j));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Matrix h(m, m);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(std::move(h));
  }
  return {name_with("sl", m), m, std::move(basis)};
}

MatLieAlgebra gl_algebra(std::size_t m) {
  require_positive(m, "gl_algebra");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) basis.push_back(elementary(m, m, i, j));
  return {name_with("gl", m), m, std::move(basis)};
}

MatLieAlgebra direct_sum(const MatLieAlgebra& a, const MatLieAlgebra& b) {
  std::vector<Matrix> basis;
  basis.reserve(a.dim() + b.dim());
  const Matrix za(a.ambient_size(), a.ambient_size());
  const Matrix zb(b.ambient_size(), b.ambient_size());
  for (const auto& x : a.basis()) basis.push_back(block_diagonal(x, zb));
  for (const auto& y : b.basis()) basis.push_back(block_diagonal(za, y));
  return {a.name() + "+" + b.name(), a.ambient_size() + b.ambient_size(), std::move(basis)};
}

RootDatum sp_root_datum(std::size_t n) {
  require_positive(n, "sp_root_datum");
  RootDatum rd;
  rd.factor_ranks = {n};
  for (std::size_t k = 0; k < n; ++k) {
    Matrix h(2 * n, 2 * n);
    h(k, k) = 1;
    h(n + k, n + k) = -1;
    rd.cartan_basis.push_back(std::move(h));
  }
  auto root = [n](std::size_t i, int si, std::size_t j, int sj) {
    std::vector<int> r(n, 0);
    r[i] += si;
    r[j] += sj;
    return r;
  };
  // Simple roots first so their indices are 0..n-1.
  for (std::size_t i = 0; i + 1 < n; ++i) rd.positive_roots.push_back({gl_block(n, i, i + 1), root(i, 1, i + 1, -1)});
  rd.positive_roots.push_back({off_block(n, 0, n, n - 1, n - 1, +1), root(n - 1, 1, n - 1, 1)});
  for (std::size_t k = 0; k < n; ++k) rd.simple_roots.push_back(k);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) rd.positive_roots.push_back({gl_block(n, i, j), root(i, 1, j, -1)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rd.positive_roots.push_back({off_block(n, 0, n, i, j, +1), root(i, 1, j, 1)});
  for (std::size_t i = 0; i + 1 < n; ++i) rd.positive_roots.push_back({off_block(n, 0, n, i, i, +1), root(i, 1, i, 1)});

  for (std::size_t i = 0; i < n; ++i) rd.rho.push_back(static_cast<int>(n - i));
  return rd;
}

RootDatum direct_sum_root_datum(const RootDatum& a, std::size_t ambient_a, const RootDatum& b, std::size_t ambient_b) {
  RootDatum rd;
  const Matrix za(ambient_a, ambient_a);
  const Matrix zb(ambient_b, ambient_b);
  for (const auto& h : a.cartan_basis) rd.cartan_basis.push_back(block_diagonal(h, zb));
  for (const auto& h : b.cartan_basis) rd.cartan_basis.push_back(block_diagonal(za, h));
  const std::size_t ra = a.rank(), rb = b.rank();
  for (const auto& rv : a.positive_roots) {
    std::vector<int> root(rv.root);
    root.resize(ra + rb, 0);
    rd.positive_roots.push_back({block_diagonal(rv.vector, zb), std::move(root)});
  }
  for (const auto& rv : b.positive_roots) {
    std::vector<int> root(ra, 0);
    root.insert(root.end(), rv.root.begin(), rv.root.end());
    rd.positive_roots.push_back({block_diagonal(za, rv.vector), std::move(root)});
  }
  rd.simple_roots = a.simple_roots;
  for (auto s : b.simple_roots) rd.simple_roots.push_back(a.positive_roots.size() + s);
  rd.rho = a.rho;
  rd.rho.insert(rd.rho.end(), b.rho.begin(), b.rho.end());
  rd.factor_ranks = a.factor_ranks;
  rd.factor_ranks.insert(rd.factor_ranks.end(), b.factor_ranks.begin(), b.factor_ranks.end());
  return rd;
}

std::string validate_root_datum(const RootDatum& rd) {
  for (std::size_t a = 0; a < rd.rank(); ++a)
    for (std::size_t b = a + 1; b < rd.rank(); ++b)
      if (!bracket(rd.cartan_basis[a], rd.cartan_basis[b]).is_zero())
        return "cartan elements " + std::to_string(a) + " and " + std::to_string(b) + " do not commute";
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    const auto& rv = rd.positive_roots[r];
    if (rv.root.size() != rd.rank()) return "root " + std::to_string(r) + " has the wrong length";
    for (std::size_t k = 0; k < rd.rank(); ++k)
      if (bracket(rd.cartan_basis[k], rv.vector) != rv.vector * Rational(rv.root[k]))
        return "root vector " + std::to_string(r) + " is not an eigenvector of h" + std::to_string(k) +
               " with the stored eigenvalue";
  }
  std::size_t total = 0;
  for (auto f : rd.factor_ranks) total += f;
  if (total != rd.rank() || rd.rho.size() != rd.rank()) return "factor ranks do not add up to the rank";
  return {};
}

} // namespace liecert
