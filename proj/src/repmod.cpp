#include "liecert/repmod.hpp"

#include <algorithm>
#include <sstream>

namespace liecert {

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(MatLieAlgebra algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
  if (action_.size() != algebra_.dim())
    throw std::invalid_argument("Representation: need one action matrix per basis element of " + algebra_.name());
  degree_ = action_.empty() ? 0 : action_.front().rows();
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (action_[i].rows() != degree_ || action_[i].cols() != degree_)
      throw std::invalid_argument("Representation: action matrix " + std::to_string(i) + " is not square of degree " +
                                  std::to_string(degree_));
  const auto& sc = algebra_.structure_constants();
  for (std::size_t i = 0; i < action_.size(); ++i)
    for (std::size_t j = i + 1; j < action_.size(); ++j) {
      Matrix lhs(degree_, degree_);
      for (const auto& [k, c] : sc.bracket(i, j)) lhs += action_[k] * c;
      if (lhs != bracket(action_[i], action_[j]))
        throw std::invalid_argument("Representation: action is not a homomorphism on basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

Matrix Representation::act(const Matrix& x) const {
  const auto coords = algebra_.coordinates(x);
  if (!coords) throw std::invalid_argument("Representation::act: element is not in " + algebra_.name());
  Matrix out(degree_, degree_);
  for (std::size_t i = 0; i < coords->size(); ++i)
    if (!(*coords)[i].is_zero()) out += action_[i] * (*coords)[i];
  return out;
}

Representation standard_representation(const MatLieAlgebra& l) { return {l, l.basis()}; }

Representation trivial_representation(const MatLieAlgebra& l, std::size_t degree) {
  return {l, std::vector<Matrix>(l.dim(), Matrix(degree, degree))};
}

Representation adjoint_representation(const MatLieAlgebra& l) {
  const auto& sc = l.structure_constants();
  std::vector<Matrix> action;
  action.reserve(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Matrix a(l.dim(), l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (const auto& [k, c] : sc.bracket(i, j)) a(k, j) = c;
    action.push_back(std::move(a));
  }
  return {l, std::move(action)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.algebra().name() != b.algebra().name() || a.algebra().dim() != b.algebra().dim())
    throw std::invalid_argument("direct_sum: representations of different algebras");
  std::vector<Matrix> action;
  action.reserve(a.action().size());
  for (std::size_t i = 0; i < a.action().size(); ++i) action.push_back(block_diagonal(a.action(i), b.action(i)));
  return {a.algebra(), std::move(action)};
}

namespace {

void require_target(const MatLieAlgebra& target, const Embedding& emb) {
  if (target.name() != emb.target().name() || target.ambient_size() != emb.target().ambient_size() ||
      target.dim() != emb.target().dim())
    throw std::invalid_argument("restriction: embedding targets " + emb.target().name() + ", not " + target.name());
}

} // namespace

Representation restriction_representation(const MatLieAlgebra& target, const Embedding& emb, ActionKind kind) {
  require_target(target, emb);
  if (kind == ActionKind::standard) return {emb.source(), emb.images()};
  const std::size_t d = target.dim();
  std::vector<Matrix> action;
  action.reserve(emb.images().size());
  for (const auto& x : emb.images()) {
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix b = bracket(x, target.basis(j));
      if (b.is_zero()) continue;
      const auto coords = target.coordinates(b);
      if (!coords) throw std::invalid_argument("restriction: bracket leaves " + target.name());
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) a(k, j) = (*coords)[k];
    }
    action.push_back(std::move(a));
  }
  return {emb.source(), std::move(action)};
}

Representation subspace_representation(const MatLieAlgebra& target, const Embedding& emb,
                                       const std::vector<Matrix>& subspace) {
  require_target(target, emb);
  const SpanBasis span(subspace);
  if (!span.independent()) throw std::invalid_argument("subspace_representation: subspace basis is dependent");
  const std::size_t d = subspace.size();
  std::vector<Matrix> action;
  action.reserve(emb.images().size());
  for (std::size_t i = 0; i < emb.images().size(); ++i) {
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto coords = span.coordinates(bracket(emb.images()[i], subspace[j]).flat());
      if (!coords)
        throw std::invalid_argument("subspace_representation: subspace is not invariant under source element " +
                                    std::to_string(i));
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) a(k, j) = (*coords)[k];
    }
    action.push_back(std::move(a));
  }
  return {emb.source(), std::move(action)};
}

std::vector<Matrix> invariant_bilinear_forms(const Representation& rep, FormSymmetry symmetry) {
  const std::size_t d = rep.degree();
  std::vector<Matrix> candidates;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      if (symmetry == FormSymmetry::skew && i == j) continue;
      Matrix b(d, d);
      b(i, j) = 1;
      b(j, i) = symmetry == FormSymmetry::symmetric ? 1 : -1;
      candidates.push_back(std::move(b));
    }
  std::vector<Matrix> transposed;
  transposed.reserve(rep.action().size());
  for (const auto& a : rep.action()) transposed.push_back(a.transpose());
  return restrict_to_kernel(std::move(candidates), rep.action().size(), [&](const Matrix& b, std::size_t i) {
    return transposed[i] * b + b * rep.action(i);
  });
}

std::size_t commutant_dimension(const Representation& rep) {
  const std::size_t d = rep.degree();
  std::vector<Matrix> candidates;
  candidates.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) candidates.push_back(elementary(d, d, i, j));
  return restrict_to_kernel(std::move(candidates), rep.action().size(),
                            [&](const Matrix& t, std::size_t i) { return bracket(t, rep.action(i)); })
      .size();
}

// ---------------------------------------------------------------------------
// Weights

std::size_t WeightDecomposition::multiplicity_of(const std::vector<int>& weight) const {
  for (const auto& s : spaces)
    if (s.weight == weight) return s.multiplicity;
  return 0;
}

namespace {

/// Matrix of H restricted to the H-invariant column span of U, in U's
/// coordinates.
Matrix restrict_operator(const Matrix& h, const Matrix& u) {
  const Matrix hu = h * u;
  const RrefResult rows = rref(u.transpose()); // pivot columns = independent rows of U
  const std::size_t r = u.cols();
  Matrix us(r, r), hus(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < r; ++c) {
      us(k, c) = u(rows.pivot_columns[k], c);
      hus(k, c) = hu(rows.pivot_columns[k], c);
    }
  const auto inv = inverse(us);
  if (!inv) throw WeightError("weight_decomposition: degenerate subspace basis");
  Matrix y = *inv * hus;
  if (u * y != hu) throw WeightError("weight_decomposition: Cartan action does not preserve a weight space");
  return y;
}

std::int64_t gershgorin_bound(const Matrix& y) {
  Rational best;
  for (std::size_t r = 0; r < y.rows(); ++r) {
    Rational s;
    for (std::size_t c = 0; c < y.cols(); ++c) s += abs(y(r, c));
    if (s > best) best = s;
  }
  // floor of a nonnegative rational
  const mpq_class q = best.to_mpq();
  const mpz_class f = q.get_num() / q.get_den();
  return f.get_si();
}

bool dominant_for(const RootDatum& rd, const std::vector<int>& w) {
  std::size_t offset = 0;
  for (auto rank : rd.factor_ranks) {
    for (std::size_t i = 0; i < rank; ++i) {
      const int next = i + 1 < rank ? w[offset + i + 1] : 0;
      if (w[offset + i] < next) return false;
    }
    offset += rank;
  }
  return true;
}

} // namespace

WeightDecomposition weight_decomposition(const Representation& rep, const RootDatum& rd) {
  const std::size_t d = rep.degree();
  std::vector<Matrix> h;
  h.reserve(rd.rank());
  for (const auto& c : rd.cartan_basis) h.push_back(rep.act(c));

  struct Piece {
    Matrix basis;
    std::vector<int> weight;
  };
  std::vector<Piece> pieces{{Matrix::identity(d), {}}};
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      const std::size_t r = piece.basis.cols();
      const Matrix y = k == 0 ? h[k] : restrict_operator(h[k], piece.basis);
      const std::int64_t bound = gershgorin_bound(y);
      std::size_t found = 0;
      for (std::int64_t lambda = bound; lambda >= -bound && found < r; --lambda) {
        Matrix shifted = y;
        for (std::size_t i = 0; i < r; ++i) shifted(i, i) -= Rational(lambda);
        const auto ker = kernel_basis(shifted);
        if (ker.empty()) continue;
        found += ker.size();
        Piece child{piece.basis * Matrix::from_columns(r, ker), piece.weight};
        child.weight.push_back(static_cast<int>(lambda));
        next.push_back(std::move(child));
      }
      if (found != r) {
        std::ostringstream os;
        os << "weight_decomposition: Cartan element " << k << " has non-integer eigenvalues or is not semisimple ("
           << found << " of " << r << " dimensions accounted for)";
        throw WeightError(os.str());
      }
    }
    pieces = std::move(next);
  }

  WeightDecomposition wd;
  wd.total = d;
  for (auto& p : pieces) {
    const std::size_t mult = p.basis.cols();
    wd.spaces.push_back({std::move(p.weight), mult, std::move(p.basis)});
  }
  std::sort(wd.spaces.begin(), wd.spaces.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
  return wd;
}

std::vector<IrreducibleSummand> decompose(const Representation& rep, const RootDatum& rd) {
  const WeightDecomposition wd = weight_decomposition(rep, rd);
  std::vector<Matrix> raising;
  for (auto s : rd.simple_roots) raising.push_back(rep.act(rd.positive_roots.at(s).vector));

  const std::size_t d = rep.degree();
  std::vector<IrreducibleSummand> out;
  std::uint64_t accounted = 0;
  for (const auto& space : wd.spaces) {
    if (!dominant_for(rd, space.weight)) continue;
    Matrix stacked(d * raising.size(), space.multiplicity);
    for (std::size_t s = 0; s < raising.size(); ++s) stacked.set_block(s * d, 0, raising[s] * space.basis);
    const std::size_t mult = raising.empty() ? space.multiplicity : kernel_basis(stacked).size();
    if (mult == 0) continue;
    const std::uint64_t dim = weyl_dim(rd, space.weight);
    out.push_back({space.weight, mult, dim});
    accounted += mult * dim;
  }
  if (accounted != d)
    throw AccountingError("decompose: summands account for " + std::to_string(accounted) + " of " +
                          std::to_string(d) + " dimensions");
  return out;
}

IrreducibilityEvidence irreducibility_certificate(const Representation& rep, const RootDatum& rd) {
  IrreducibilityEvidence ev;
  ev.summands = decompose(rep, rd);
  ev.irreducible = ev.summands.size() == 1 && ev.summands.front().multiplicity == 1;
  ev.commutant_dim = commutant_dimension(rep);
  return ev;
}

// ---------------------------------------------------------------------------
// Second exterior power

Matrix wedge2_image(const Matrix& b, const Vector& u, const Vector& v) {
  const Vector bu = b * u;
  const Vector bv = b * v;
  const std::size_t d = u.size();
  Matrix x(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Rational e;
      if (!v[r].is_zero() && !bu[c].is_zero()) e += v[r] * bu[c];
      if (!u[r].is_zero() && !bv[c].is_zero()) e -= u[r] * bv[c];
      x(r, c) = std::move(e);
    }
  return x;
}

std::vector<Wedge2Image> wedge2_to_so(std::size_t dim, const Matrix& b) {
  if (b.rows() != dim || b.cols() != dim) throw std::invalid_argument("wedge2_to_so: form has the wrong size");
  if (!b.is_symmetric()) throw std::invalid_argument("wedge2_to_so: form is not symmetric");
  if (rank(b) != dim) throw std::invalid_argument("wedge2_to_so: form is degenerate");
  std::vector<Wedge2Image> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector u(dim), v(dim);
      u[i] = 1;
      v[j] = 1;
      out.push_back({i, j, wedge2_image(b, u, v)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension formulas

std::vector<int> fundamental_weight(std::size_t n, std::size_t j) {
  if (j > n) throw std::invalid_argument("fundamental_weight: j exceeds the rank");
  std::vector<int> w(n, 0);
  for (std::size_t i = 0; i < j; ++i) w[i] = 1;
  return w;
}

std::uint64_t weyl_dim(std::size_t n, const std::vector<int>& lambda) {
  if (lambda.size() != n) throw std::invalid_argument("weyl_dim: weight has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (lambda[i] < (i + 1 < n ? lambda[i + 1] : 0)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  std::vector<std::int64_t> shifted(n), rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = static_cast<std::int64_t>(n - i);
    shifted[i] = lambda[i] + rho[i];
  }
  Rational dim(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dim *= Rational(shifted[i] - shifted[j], rho[i] - rho[j]); // e_i - e_j
      dim *= Rational(shifted[i] + shifted[j], rho[i] + rho[j]); // e_i + e_j
    }
    dim *= Rational(shifted[i], rho[i]); // 2 e_i, with the factor 2 cancelling
  }
  return static_cast<std::uint64_t>(dim.to_int64());
}

std::uint64_t weyl_dim(const RootDatum& rd, const std::vector<int>& lambda) {
  if (lambda.size() != rd.rank()) throw std::invalid_argument("weyl_dim: weight has the wrong length");
  std::uint64_t dim = 1;
  std::size_t offset = 0;
  for (auto rank : rd.factor_ranks) {
    dim *= weyl_dim(rank, std::vector<int>(lambda.begin() + static_cast<std::ptrdiff_t>(offset),
                                           lambda.begin() + static_cast<std::ptrdiff_t>(offset + rank)));
    offset += rank;
  }
  return dim;
}

std::uint64_t fundamental_dim_binomial(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw std::invalid_argument("fundamental_dim_binomial: need 1 <= j <= n");
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), 2 * n, j);
  if (j >= 2) mpz_bin_uiui(b.get_mpz_t(), 2 * n, j - 2);
  const mpz_class diff = a - b;
  return static_cast<std::uint64_t>(Rational(mpq_class(diff)).to_int64());
}

std::vector<Lemma4nVerdict> lemma_4n_audit(std::size_t n) {
  if (n < 3) throw std::invalid_argument("lemma_4n_audit: requires n >= 3");
  std::vector<Lemma4nVerdict> out;
  for (std::size_t j = 2; j <= n; ++j) {
    const std::uint64_t dim = fundamental_dim_binomial(n, j);
    out.push_back({j, dim, 4 * n, dim > 4 * n});
  }
  return out;
}

namespace {

std::size_t common_radical_dimension(const std::vector<Matrix>& forms, std::size_t d) {
  if (forms.empty()) return d;
  Matrix stacked(d * forms.size(), d);
  for (std::size_t s = 0; s < forms.size(); ++s) stacked.set_block(s * d, 0, forms[s]);
  return kernel_basis(stacked).size();
}

} // namespace

MinimalOrthogonalReport minimal_orthogonal_audit(std::size_t n) {
  if (n < 3) throw std::invalid_argument("minimal_orthogonal_audit: requires n >= 3");
  MinimalOrthogonalReport rep;
  rep.n = n;

  rep.fundamental_dims = lemma_4n_audit(n);
  rep.fundamental_pass = std::all_of(rep.fundamental_dims.begin(), rep.fundamental_dims.end(), [n](const auto& v) {
    return v.pass && weyl_dim(n, fundamental_weight(n, v.j)) == v.dimension;
  });

  const MatLieAlgebra sp = sp_algebra(n);
  const Representation standard = standard_representation(sp);
  rep.standard_symmetric_forms = invariant_bilinear_forms(standard, FormSymmetry::symmetric).size();
  rep.standard_skew_forms = invariant_bilinear_forms(standard, FormSymmetry::skew).size();

  // Standard plus k trivial summands, total degree 2n+1 .. 4n. A nonzero
  // joint radical rules out every nondegenerate form in the span.
  rep.padded_pass = rep.standard_symmetric_forms == 0 && rep.standard_skew_forms == 1;
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    const Representation padded = direct_sum(standard, trivial_representation(sp, k));
    const auto forms = invariant_bilinear_forms(padded, FormSymmetry::symmetric);
    PaddedStandardWitness w;
    w.trivial_count = k;
    w.symmetric_forms = forms.size();
    w.common_radical = common_radical_dimension(forms, padded.degree());
    w.admits_nondegenerate = w.common_radical == 0;
    rep.padded_pass = rep.padded_pass && !w.admits_nondegenerate;
    rep.padded.push_back(w);
  }

  const Representation twice = direct_sum(standard, standard);
  const auto forms = invariant_bilinear_forms(twice, FormSymmetry::symmetric);
  rep.double_standard_symmetric_forms = forms.size();
  if (forms.size() == 1) {
    rep.double_standard_signature = signature(forms.front());
    rep.double_standard_pass = rep.double_standard_signature == Signature{2 * n, 2 * n, 0};
  }
  rep.minimal_dimension = rep.pass() ? 4 * n : 0;
  return rep;
}

} // namespace liecert
