#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecert/classical.hpp"
#include "liecert/embeddings.hpp"
#include "liecert/liealg.hpp"

namespace liecert {

/// A finite-dimensional representation: one d x d action matrix per basis
/// element of the algebra.
class Representation {
public:
  Representation() = default;
  /// Verifies action([b_i,b_j]) = [action(b_i), action(b_j)] for all pairs and
  /// throws std::invalid_argument with the first failing pair otherwise.
  Representation(MatLieAlgebra algebra, std::vector<Matrix> action);

  [[nodiscard]] const MatLieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const std::vector<Matrix>& action() const { return action_; }
  [[nodiscard]] const Matrix& action(std::size_t i) const { return action_[i]; }

  /// Action of an arbitrary element of the algebra (given as a matrix).
  [[nodiscard]] Matrix act(const Matrix& x) const;

private:
  MatLieAlgebra algebra_;
  std::size_t degree_ = 0;
  std::vector<Matrix> action_;
};

enum class ActionKind { standard, adjoint };
enum class FormSymmetry { symmetric, skew };

Representation standard_representation(const MatLieAlgebra& l);
Representation trivial_representation(const MatLieAlgebra& l, std::size_t degree);
Representation adjoint_representation(const MatLieAlgebra& l);
Representation direct_sum(const Representation& a, const Representation& b);

/// The source of `emb` acting on the target: through the images as matrices
/// (standard) or by bracket on the target's basis coordinates (adjoint).
Representation restriction_representation(const MatLieAlgebra& target, const Embedding& emb, ActionKind kind);

/// The source of `emb` acting by bracket on span(subspace) inside the target,
/// in the coordinates of the given subspace basis. Throws if not invariant.
Representation subspace_representation(const MatLieAlgebra& target, const Embedding& emb,
                                       const std::vector<Matrix>& subspace);

/// Basis of the invariant forms: A_i^T B + B A_i = 0 for all i, B^T = +-B.
std::vector<Matrix> invariant_bilinear_forms(const Representation& rep, FormSymmetry symmetry);

/// Dimension of { T : [T, A_i] = 0 for all i }.
std::size_t commutant_dimension(const Representation& rep);

class WeightError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class AccountingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct WeightSpace {
  std::vector<int> weight;
  std::size_t multiplicity = 0;
  Matrix basis; // degree x multiplicity, columns span the weight space
};

struct WeightDecomposition {
  std::vector<WeightSpace> spaces; // sorted by weight, descending
  std::size_t total = 0;

  [[nodiscard]] std::size_t multiplicity_of(const std::vector<int>& weight) const;
};

/// Simultaneous eigenspaces of the Cartan action. Throws WeightError when an
/// eigenvalue is not an integer or the action is not semisimple.
WeightDecomposition weight_decomposition(const Representation& rep, const RootDatum& rd);

struct IrreducibleSummand {
  std::vector<int> highest_weight;
  std::size_t multiplicity = 0;
  std::uint64_t dim_each = 0;

  friend bool operator==(const IrreducibleSummand&, const IrreducibleSummand&) = default;
};

/// Highest-weight multiplicities from joint kernels of the simple root
/// vectors on each weight space. Throws AccountingError unless
/// sum multiplicity * dim_each equals the degree.
std::vector<IrreducibleSummand> decompose(const Representation& rep, const RootDatum& rd);

struct IrreducibilityEvidence {
  bool irreducible = false;
  std::vector<IrreducibleSummand> summands;
  std::size_t commutant_dim = 0;
};

IrreducibilityEvidence irreducibility_certificate(const Representation& rep, const RootDatum& rd);

struct Wedge2Image {
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix image; // of e_i ^ e_j
};

/// u ^ v -> (w -> B(u,w) v - B(v,w) u) as a d x d matrix.
Matrix wedge2_image(const Matrix& b, const Vector& u, const Vector& v);

/// Images of e_i ^ e_j (i < j) in lexicographic order. Throws
/// std::invalid_argument when B is not symmetric or is degenerate.
std::vector<Wedge2Image> wedge2_to_so(std::size_t dim, const Matrix& b);

/// e_1 + ... + e_j in epsilon coordinates for C_n.
std::vector<int> fundamental_weight(std::size_t n, std::size_t j);

/// Weyl dimension formula for C_n; throws std::invalid_argument unless
/// lambda_1 >= ... >= lambda_n >= 0.
std::uint64_t weyl_dim(std::size_t n, const std::vector<int>& lambda);
/// Product over the simple factors of rd.
std::uint64_t weyl_dim(const RootDatum& rd, const std::vector<int>& lambda);

/// C(2n, j) - C(2n, j-2) with C(m, p) = 0 for p < 0; requires 1 <= j <= n.
std::uint64_t fundamental_dim_binomial(std::size_t n, std::size_t j);

struct Lemma4nVerdict {
  std::size_t j = 0;
  std::uint64_t dimension = 0;
  std::uint64_t bound = 0; // 4n
  bool pass = false;
};

/// dim of the j-th fundamental module exceeds 4n for 2 <= j <= n; needs n >= 3.
std::vector<Lemma4nVerdict> lemma_4n_audit(std::size_t n);

struct PaddedStandardWitness {
  std::size_t trivial_count = 0;        // k copies of the trivial module added to R^{2n}
  std::size_t symmetric_forms = 0;      // dimension of the invariant symmetric forms
  std::size_t common_radical = 0;       // dimension of the joint radical of those forms
  bool admits_nondegenerate = false;    // false whenever common_radical > 0
};

struct MinimalOrthogonalReport {
  std::size_t n = 0;
  std::vector<Lemma4nVerdict> fundamental_dims;           // pillar (a)
  bool fundamental_pass = false;
  std::size_t standard_symmetric_forms = 0;               // pillar (b)
  std::size_t standard_skew_forms = 0;
  std::vector<PaddedStandardWitness> padded;
  bool padded_pass = false;
  std::size_t double_standard_symmetric_forms = 0;        // pillar (c)
  Signature double_standard_signature;
  bool double_standard_pass = false;
  std::size_t minimal_dimension = 0;                      // 4n when all pillars hold, else 0
  [[nodiscard]] bool pass() const { return fundamental_pass && padded_pass && double_standard_pass; }
};

/// Certifies that 4n is the least degree of a nontrivial sp(n)-module with a
/// nondegenerate invariant symmetric form; needs n >= 3.
MinimalOrthogonalReport minimal_orthogonal_audit(std::size_t n);

} // namespace liecert
