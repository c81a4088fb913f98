#pragma once

#include <cstddef>
#include <vector>

#include "liecert/classical.hpp"
#include "liecert/liealg.hpp"

namespace liecert {

/// A certified injective homomorphism between matrix Lie algebras.
struct Embedding {
  LinearAlgebraMap map;
  Certificate certificate;
  Matrix target_form;                    // J with X^T J + J X = 0 on the target
  std::vector<std::size_t> factor_dims;  // split of the source basis into simple factors

  [[nodiscard]] const MatLieAlgebra& source() const { return map.source; }
  [[nodiscard]] const MatLieAlgebra& target() const { return map.target; }
  [[nodiscard]] const std::vector<Matrix>& images() const { return map.images; }
  /// Images of the basis elements of the given source factor.
  [[nodiscard]] std::vector<Matrix> factor_images(std::size_t factor) const;
  /// First image index violating the target's defining relation, or -1.
  [[nodiscard]] long defining_relation_violation() const;
};

/// sp(n) -> so(2n,2n): [[A,B],[C,-A^T]] goes to the 4x4 block matrix with rows
/// (A, B, 0, 0), (C, -A^T, 0, 0), (0, 0, -A^T, -C), (0, 0, -B, A).
Embedding embed_sp_in_so(std::size_t n);

/// sp(n) + sp(1) -> so(2n,2n); the sp(1) factor [[a,b],[c,-a]] lands on
/// w0_element(n, a, b, c).
Embedding embed_sp_sp1_in_so(std::size_t n);

/// sp(n) + sp(1) -> sp(n+1) in coordinates: sp(n) acts on the symplectic pairs
/// (i, n+1+i) for i < n and sp(1) on the pair (n, 2n+1) (0-based indices).
Embedding embed_sp_sp1_in_sp_succ(std::size_t n);

/// The 4n x 4n matrix with n x n block rows (aI, 0, 0, bI), (0, aI, -bI, 0),
/// (0, -cI, -aI, 0), (cI, 0, 0, -aI): the general element commuting with the
/// image of sp(n) in so(2n,2n).
Matrix w0_element(std::size_t n, const Rational& a, const Rational& b, const Rational& c);

/// True iff span(elements) equals the span of the three-parameter family.
bool spans_w0_family(std::size_t n, const std::vector<Matrix>& elements);

struct SymmetricSplit {
  MatLieAlgebra parent;                 // sp(n+1)
  Embedding embedding;                  // sp(n) + sp(1) -> sp(n+1)
  std::vector<Matrix> subalgebra;       // embedding images
  std::vector<Matrix> complement;       // Killing-orthogonal complement, dimension 4n
  Matrix killing_on_complement;
  Signature complement_signature;
  SymmetricPairCertificate pair;
  bool parent_basis_recovered = false;  // subalgebra + complement has rank dim(parent)
};

/// Decomposition sp(n+1) = (sp(n) + sp(1)) + m with every structural claim
/// checked. Degenerate restrictions propagate as DegenerateRestrictionError.
SymmetricSplit symmetric_split(std::size_t n);

struct SchurConstants {
  Rational a_n;  // K_{n+1} restricted to the sp(n) factor, over K_n
  Rational a_1;  // K_{n+1} restricted to the sp(1) factor, over K_1
  Rational a_0;  // K_{n+1} restricted to m, over the normalized invariant form on m
  Matrix reference_form;          // the invariant symmetric form on m, first nonzero entry 1
  Certificate proportionality;    // each restriction is an exact multiple
  Certificate cross_terms_zero;   // the three summands are Killing-orthogonal
};

/// Rescaling constants relating the Killing form of sp(n+1) to invariant forms
/// on the three summands of symmetric_split(n).
SchurConstants schur_constants(std::size_t n);

} // namespace liecert
