#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecert/rational.hpp"

namespace liecert {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Column matrix from a vector.
  static Matrix column(const Vector& v);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  /// Reshape a row-major flattening back into a rows x cols matrix.
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vector& flat);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<Rational>& entries() const noexcept { return data_; }
  /// Row-major flattening (the m^2-vector view of a square matrix).
  [[nodiscard]] const Vector& flat() const noexcept { return data_; }
  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector col(std::size_t c) const;

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_skew() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] Rational trace() const;

  /// Copy of the block starting at (r0, c0).
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Elementary matrix E_{ij} of the given size.
Matrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

/// Block-diagonal sum.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

Vector operator+(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& s);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space; one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with A x = b, or nullopt when b is not in the column space.
/// Throws std::invalid_argument if A.rows() != b.size().
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of { sum_j x_j C_j : op(sum_j x_j C_j, s) = 0 for every s < constraint_count }
/// where C_j are the candidates and op is linear in its first argument.
/// Constraints are applied one at a time so the working system stays small.
std::vector<Matrix> restrict_to_kernel(std::vector<Matrix> candidates, std::size_t constraint_count,
                                       const std::function<Matrix(const Matrix&, std::size_t)>& op);

struct Congruence {
  Matrix diagonal;  // D
  Matrix transform; // P, with P^T S P = D
};

/// Symmetric Gaussian elimination by congruence. Throws std::invalid_argument
/// when S is not symmetric.
Congruence congruent_diagonalize(const Matrix& s);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  [[nodiscard]] std::string to_string() const;
};

Signature signature(const Matrix& s);

} // namespace liecert
