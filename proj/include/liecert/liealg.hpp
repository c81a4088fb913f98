#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liecert/exactmat.hpp"

namespace liecert {

/// XY - YX. Throws std::invalid_argument on size mismatch.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Coordinates relative to a fixed list of independent vectors.
///
/// The list is row-reduced once together with the transform that produced the
/// reduction; a query then reads coordinates off the pivot positions, checks
/// the residual, and maps back through the transform.
class SpanBasis {
public:
  SpanBasis() = default;
  explicit SpanBasis(const std::vector<Vector>& vectors);
  explicit SpanBasis(const std::vector<Matrix>& matrices);

  [[nodiscard]] std::size_t size() const noexcept { return count_; }
  [[nodiscard]] std::size_t rank() const noexcept { return pivots_.size(); }
  [[nodiscard]] bool independent() const noexcept { return rank() == count_; }

  /// Coordinates c with v = sum c_i vectors[i]; nullopt when v is outside the
  /// span. Requires independent().
  [[nodiscard]] std::optional<Vector> coordinates(const Vector& v) const;
  [[nodiscard]] bool contains(const Vector& v) const;

private:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

  [[nodiscard]] std::optional<Vector> reduced_coordinates(const Vector& v) const;

  std::size_t count_ = 0;
  std::size_t length_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<SparseRow> reduced_;   // rref rows, pivot entry omitted
  std::vector<SparseRow> transform_; // reduced_ row k = sum_j transform_[k][j] * vectors[j]
};

/// [b_i, b_j] = sum_k c(i,j,k) b_k, stored sparsely per (i, j).
struct StructureConstants {
  using Entry = std::pair<std::size_t, Rational>;

  std::size_t dim = 0;
  std::vector<std::vector<Entry>> table; // index i * dim + j

  [[nodiscard]] const std::vector<Entry>& bracket(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  [[nodiscard]] Rational at(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coordinates of [x, y] for x, y given in coordinates.
  [[nodiscard]] Vector bracket_coords(const Vector& x, const Vector& y) const;
};

/// Thrown when some [b_i, b_j] leaves the span of the basis.
class ClosureError : public std::runtime_error {
public:
  ClosureError(std::size_t i, std::size_t j, const std::string& what)
      : std::runtime_error(what), i(i), j(j) {}
  std::size_t i;
  std::size_t j;
};

/// A Lie algebra of m x m matrices with a fixed ordered basis.
///
/// Copies share the basis and the lazily computed structure constants.
class MatLieAlgebra {
public:
  MatLieAlgebra();
  /// Throws std::invalid_argument if a basis element is not m x m or the
  /// basis is linearly dependent. Closure is checked when the structure
  /// constants are first requested.
  MatLieAlgebra(std::string name, std::size_t ambient_size, std::vector<Matrix> basis);

  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] std::size_t ambient_size() const;
  [[nodiscard]] std::size_t dim() const;
  [[nodiscard]] const std::vector<Matrix>& basis() const;
  [[nodiscard]] const Matrix& basis(std::size_t i) const;

  [[nodiscard]] std::optional<Vector> coordinates(const Matrix& x) const;
  [[nodiscard]] bool contains(const Matrix& x) const;
  [[nodiscard]] Matrix element(const Vector& coords) const;

  /// Throws ClosureError naming the first pair whose bracket leaves the span.
  [[nodiscard]] const StructureConstants& structure_constants() const;

private:
  struct Impl;
  static const std::shared_ptr<const Impl>& empty_impl();
  std::shared_ptr<const Impl> impl_;
};

std::optional<std::array<std::size_t, 2>> find_antisymmetry_violation(const StructureConstants& sc);
bool jacobi_holds(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k);
/// Exhaustive over i < j < k (antisymmetry covers the remaining orderings).
std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureConstants& sc);
/// `samples` random triples drawn from `rng`.
std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureConstants& sc, std::size_t samples,
                                                                std::mt19937_64& rng);

/// A symmetric bilinear form on a MatLieAlgebra, given by its Gram matrix.
struct AlgebraForm {
  MatLieAlgebra algebra;
  Matrix gram;

  [[nodiscard]] Rational evaluate(const Vector& x, const Vector& y) const;
  [[nodiscard]] Rational evaluate(const Matrix& x, const Matrix& y) const;
  /// Gram matrix on the given elements (which must lie in the algebra).
  [[nodiscard]] Matrix restricted_to(const std::vector<Matrix>& elements) const;
};

/// K(b_i, b_j) = tr(ad b_i o ad b_j), contracted from the structure constants.
AlgebraForm killing_form(const MatLieAlgebra& l);
/// tr(b_i b_j) in the ambient matrix representation.
AlgebraForm trace_form(const MatLieAlgebra& l);
/// First (i, j, k) with B([b_i,b_j], b_k) + B(b_j, [b_i,b_k]) != 0.
std::optional<std::array<std::size_t, 3>> find_ad_invariance_violation(const AlgebraForm& form);

/// Basis of { X in L : [X, s] = 0 for all s in S }.
std::vector<Matrix> centralizer_in(const MatLieAlgebra& l, const std::vector<Matrix>& s);

struct LinearAlgebraMap {
  MatLieAlgebra source;
  MatLieAlgebra target;
  std::vector<Matrix> images; // one per source basis element
};

/// First failing pair (or element) of a certification, for debugging.
struct Counterexample {
  std::string kind; // "shape", "span", "bracket", "injectivity", "closure", ...
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

struct Certificate {
  bool ok = true;
  std::size_t checks = 0;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return ok; }
  static Certificate failure(Counterexample c, std::size_t checks = 0) { return {false, checks, std::move(c)}; }
};

/// Bracket preservation on all basis pairs plus injectivity.
Certificate certify_homomorphism(const LinearAlgebraMap& map);

/// Raised when the Killing form restricted to a subspace is degenerate.
class DegenerateRestrictionError : public std::runtime_error {
public:
  DegenerateRestrictionError(std::vector<Matrix> radical, const std::string& what)
      : std::runtime_error(what), radical(std::move(radical)) {}
  std::vector<Matrix> radical;
};

/// Killing-orthogonal complement of span(h) in L.
std::vector<Matrix> killing_orthogonal_complement(const MatLieAlgebra& l, const std::vector<Matrix>& h);

struct SymmetricPairCertificate {
  Certificate certificate;
  std::vector<Matrix> complement;
  bool complement_brackets_span_subalgebra = false;
  std::size_t complement_bracket_rank = 0;
};

/// Verifies [h,h] in h, [h,m] in m and [m,m] in h for m the Killing complement.
SymmetricPairCertificate symmetric_pair_check(const MatLieAlgebra& l, const std::vector<Matrix>& h);

} // namespace liecert
