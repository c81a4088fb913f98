#include "liecert/embeddings.hpp"

#include <sstream>

#include "liecert/repmod.hpp"

namespace liecert {

namespace {

Matrix scaled_identity(std::size_t n, const Rational& s) {
  Matrix m(n, n);
  if (!s.is_zero())
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

/// The block image of [[A,B],[C,-A^T]] in so(2n,2n).
Matrix sp_block_image(std::size_t n, const Matrix& m) {
  const Matrix a = m.block(0, 0, n, n);
  const Matrix b = m.block(0, n, n, n);
  const Matrix c = m.block(n, 0, n, n);
  const Matrix at = a.transpose();
  Matrix x(4 * n, 4 * n);
  x.set_block(0, 0, a);
  x.set_block(0, n, b);
  x.set_block(n, 0, c);
  x.set_block(n, n, -at);
  x.set_block(2 * n, 2 * n, -at);
  x.set_block(2 * n, 3 * n, -c);
  x.set_block(3 * n, 2 * n, -b);
  x.set_block(3 * n, 3 * n, a);
  return x;
}

Embedding finish(LinearAlgebraMap map, Matrix form, std::vector<std::size_t> factor_dims) {
  Embedding emb{std::move(map), {}, std::move(form), std::move(factor_dims)};
  emb.certificate = certify_homomorphism(emb.map);
  if (emb.certificate.ok) {
    const long bad = emb.defining_relation_violation();
    if (bad >= 0)
      emb.certificate = Certificate::failure({"defining_relation", static_cast<std::size_t>(bad),
                                              static_cast<std::size_t>(bad), "image violates X^T J + J X = 0"},
                                             emb.certificate.checks);
  }
  return emb;
}

std::vector<Matrix> concat(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t flat_rank(const std::vector<Matrix>& xs) { return xs.empty() ? 0 : SpanBasis(xs).rank(); }

/// Scalar s with lhs = s * rhs entrywise, using the first nonzero of rhs.
std::optional<Rational> exact_ratio(const Matrix& lhs, const Matrix& rhs, std::string& detail) {
  std::optional<Rational> s;
  for (std::size_t r = 0; r < rhs.rows() && !s; ++r)
    for (std::size_t c = 0; c < rhs.cols() && !s; ++c)
      if (!rhs(r, c).is_zero()) s = lhs(r, c) / rhs(r, c);
  if (!s) {
    detail = "reference form is zero";
    return std::nullopt;
  }
  for (std::size_t r = 0; r < rhs.rows(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      if (lhs(r, c) != *s * rhs(r, c)) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << "): " << lhs(r, c) << " != " << *s << " * " << rhs(r, c);
        detail = os.str();
        return std::nullopt;
      }
  return s;
}

} // namespace

std::vector<Matrix> Embedding::factor_images(std::size_t factor) const {
  std::size_t start = 0;
  for (std::size_t f = 0; f < factor; ++f) start += factor_dims.at(f);
  const std::size_t len = factor_dims.at(factor);
  return {map.images.begin() + static_cast<std::ptrdiff_t>(start),
          map.images.begin() + static_cast<std::ptrdiff_t>(start + len)};
}

long Embedding::defining_relation_violation() const {
  for (std::size_t i = 0; i < map.images.size(); ++i)
    if (!preserves_form(map.images[i], target_form)) return static_cast<long>(i);
  return -1;
}

Matrix w0_element(std::size_t n, const Rational& a, const Rational& b, const Rational& c) {
  Matrix x(4 * n, 4 * n);
  x.set_block(0, 0, scaled_identity(n, a));
  x.set_block(0, 3 * n, scaled_identity(n, b));
  x.set_block(n, n, scaled_identity(n, a));
  x.set_block(n, 2 * n, scaled_identity(n, -b));
  x.set_block(2 * n, n, scaled_identity(n, -c));
  x.set_block(2 * n, 2 * n, scaled_identity(n, -a));
  x.set_block(3 * n, 0, scaled_identity(n, c));
  x.set_block(3 * n, 3 * n, scaled_identity(n, -a));
  return x;
}

bool spans_w0_family(std::size_t n, const std::vector<Matrix>& elements) {
  const std::vector<Matrix> family{w0_element(n, 1, 0, 0), w0_element(n, 0, 1, 0), w0_element(n, 0, 0, 1)};
  const std::size_t r = flat_rank(elements);
  return r == 3 && flat_rank(concat(elements, family)) == 3;
}

Embedding embed_sp_in_so(std::size_t n) {
  const MatLieAlgebra sp = sp_algebra(n);
  const MatLieAlgebra so = so_split_algebra(2 * n);
  std::vector<Matrix> images;
  images.reserve(sp.dim());
  for (const auto& m : sp.basis()) images.push_back(sp_block_image(n, m));
  return finish({sp, so, std::move(images)}, split_orthogonal_j(2 * n), {sp.dim()});
}

Embedding embed_sp_sp1_in_so(std::size_t n) {
  const MatLieAlgebra sp = sp_algebra(n);
  const MatLieAlgebra sp1 = sp_algebra(1);
  const MatLieAlgebra source = direct_sum(sp, sp1);
  const MatLieAlgebra so = so_split_algebra(2 * n);
  std::vector<Matrix> images;
  images.reserve(source.dim());
  for (const auto& m : sp.basis()) images.push_back(sp_block_image(n, m));
  for (const auto& s : sp1.basis()) images.push_back(w0_element(n, s(0, 0), s(0, 1), s(1, 0)));
  return finish({source, so, std::move(images)}, split_orthogonal_j(2 * n), {sp.dim(), sp1.dim()});
}

Embedding embed_sp_sp1_in_sp_succ(std::size_t n) {
  const MatLieAlgebra sp = sp_algebra(n);
  const MatLieAlgebra sp1 = sp_algebra(1);
  const MatLieAlgebra source = direct_sum(sp, sp1);
  const MatLieAlgebra target = sp_algebra(n + 1);
  auto index = [n](std::size_t i) { return i < n ? i : i + 1; };
  const std::size_t big = 2 * n + 2;
  std::vector<Matrix> images;
  images.reserve(source.dim());
  for (const auto& m : sp.basis()) {
    Matrix x(big, big);
    for (std::size_t r = 0; r < 2 * n; ++r)
      for (std::size_t c = 0; c < 2 * n; ++c)
        if (!m(r, c).is_zero()) x(index(r), index(c)) = m(r, c);
    images.push_back(std::move(x));
  }
  const std::size_t p = n, q = 2 * n + 1;
  for (const auto& s : sp1.basis()) {
    Matrix x(big, big);
    x(p, p) = s(0, 0);
    x(p, q) = s(0, 1);
    x(q, p) = s(1, 0);
    x(q, q) = s(1, 1);
    images.push_back(std::move(x));
  }
  return finish({source, target, std::move(images)}, symplectic_j(n + 1), {sp.dim(), sp1.dim()});
}

SymmetricSplit symmetric_split(std::size_t n) {
  SymmetricSplit out;
  out.embedding = embed_sp_sp1_in_sp_succ(n);
  out.parent = out.embedding.target();
  out.subalgebra = out.embedding.images();
  out.pair = symmetric_pair_check(out.parent, out.subalgebra);
  out.complement = out.pair.complement;
  out.killing_on_complement = killing_form(out.parent).restricted_to(out.complement);
  out.complement_signature = signature(out.killing_on_complement);
  out.parent_basis_recovered = flat_rank(concat(out.subalgebra, out.complement)) == out.parent.dim();
  return out;
}

SchurConstants schur_constants(std::size_t n) {
  SchurConstants out;
  const SymmetricSplit split = symmetric_split(n);
  if (!split.embedding.certificate.ok || !split.pair.certificate.ok) {
    out.proportionality = Certificate::failure({"symmetric_split", 0, 0, "symmetric split is not certified"});
    out.cross_terms_zero = out.proportionality;
    return out;
  }
  const AlgebraForm k = killing_form(split.parent);
  const auto sp_images = split.embedding.factor_images(0);
  const auto sp1_images = split.embedding.factor_images(1);

  // Gram of K_{n+1} on the adapted basis (sp(n) images, sp(1) images, m).
  const auto adapted = concat(concat(sp_images, sp1_images), split.complement);
  const Matrix full = k.restricted_to(adapted);
  const std::size_t d0 = sp_images.size(), d1 = sp1_images.size(), dm = split.complement.size();

  auto& cross = out.cross_terms_zero;
  const std::size_t offsets[] = {0, d0, d0 + d1, d0 + d1 + dm};
  for (std::size_t bi = 0; bi < 3 && cross.ok; ++bi)
    for (std::size_t bj = bi + 1; bj < 3 && cross.ok; ++bj)
      for (std::size_t r = offsets[bi]; r < offsets[bi + 1] && cross.ok; ++r)
        for (std::size_t c = offsets[bj]; c < offsets[bj + 1]; ++c) {
          ++cross.checks;
          if (!full(r, c).is_zero()) {
            cross = Certificate::failure({"cross_term", r, c, "K(x,y) = " + full(r, c).to_string()}, cross.checks);
            break;
          }
        }

  const Matrix kn = killing_form(sp_algebra(n)).gram;
  const Matrix k1 = killing_form(sp_algebra(1)).gram;
  const Representation on_m = subspace_representation(split.parent, split.embedding, split.complement);
  auto forms = invariant_bilinear_forms(on_m, FormSymmetry::symmetric);
  auto& prop = out.proportionality;
  if (forms.size() != 1) {
    prop = Certificate::failure({"reference_form", forms.size(), 1,
                                 "expected a one-dimensional space of invariant symmetric forms on m"});
    return out;
  }
  Matrix ref = std::move(forms.front());
  for (const auto& x : ref.entries())
    if (!x.is_zero()) {
      ref *= Rational(1) / x;
      break;
    }
  out.reference_form = ref;

  struct Target {
    const char* label;
    Matrix restricted;
    const Matrix* reference;
    Rational* slot;
  } targets[] = {
      {"sp(n) factor", full.block(0, 0, d0, d0), &kn, &out.a_n},
      {"sp(1) factor", full.block(d0, d0, d1, d1), &k1, &out.a_1},
      {"complement", full.block(d0 + d1, d0 + d1, dm, dm), &out.reference_form, &out.a_0},
  };
  for (std::size_t t = 0; t < 3; ++t) {
    ++prop.checks;
    std::string detail;
    const auto s = exact_ratio(targets[t].restricted, *targets[t].reference, detail);
    if (!s) {
      prop = Certificate::failure({"proportionality", t, t, std::string(targets[t].label) + ": " + detail}, prop.checks);
      return out;
    }
    *targets[t].slot = *s;
  }
  return out;
}

} // namespace liecert
