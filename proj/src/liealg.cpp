#include "liecert/liealg.hpp"

#include <mutex>
#include <sstream>

namespace liecert {

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw std::invalid_argument("bracket: operands must be square of equal size");
  return x * y - y * x;
}

// ---------------------------------------------------------------------------
// SpanBasis

SpanBasis::SpanBasis(const std::vector<Matrix>& matrices) : SpanBasis([&] {
  std::vector<Vector> flat;
  flat.reserve(matrices.size());
  for (const auto& m : matrices) flat.push_back(m.flat());
  return flat;
}()) {}

SpanBasis::SpanBasis(const std::vector<Vector>& vectors) : count_(vectors.size()) {
  if (vectors.empty()) return;
  length_ = vectors.front().size();
  Matrix aug(count_, length_ + count_);
  for (std::size_t r = 0; r < count_; ++r) {
    if (vectors[r].size() != length_) throw std::invalid_argument("SpanBasis: vectors of unequal length");
    for (std::size_t c = 0; c < length_; ++c) aug(r, c) = vectors[r][c];
    aug(r, length_ + r) = 1;
  }
  // Row-reduce only over the first length_ columns; the identity block
  // records the transform.
  const std::size_t rows = count_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < length_ && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < aug.cols(); ++k) std::swap(aug(p, k), aug(r, k));
    const Rational inv = Rational(1) / aug(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < aug.cols(); ++k)
      if (!aug(r, k).is_zero()) {
        aug(r, k) *= inv;
        if (k != c) nz.push_back(k);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      const Rational f = aug(i, c);
      aug(i, c) = Rational();
      for (std::size_t k : nz) aug(i, k) -= f * aug(r, k);
    }
    pivots_.push_back(c);
    ++r;
  }
  reduced_.resize(pivots_.size());
  transform_.resize(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    for (std::size_t c = 0; c < length_; ++c)
      if (c != pivots_[k] && !aug(k, c).is_zero()) reduced_[k].emplace_back(c, aug(k, c));
    for (std::size_t j = 0; j < count_; ++j)
      if (!aug(k, length_ + j).is_zero()) transform_[k].emplace_back(j, aug(k, length_ + j));
  }
}

std::optional<Vector> SpanBasis::reduced_coordinates(const Vector& v) const {
  if (v.size() != length_ && count_ > 0) throw std::invalid_argument("SpanBasis: query vector has wrong length");
  Vector residual(v);
  Vector coeff(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    coeff[k] = v[pivots_[k]];
    if (coeff[k].is_zero()) continue;
    residual[pivots_[k]] = Rational();
    for (const auto& [c, x] : reduced_[k]) residual[c] -= coeff[k] * x;
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeff;
}

std::optional<Vector> SpanBasis::coordinates(const Vector& v) const {
  if (!independent()) throw std::logic_error("SpanBasis::coordinates: basis vectors are dependent");
  if (count_ == 0) {
    if (!is_zero(v)) return std::nullopt;
    return Vector{};
  }
  auto coeff = reduced_coordinates(v);
  if (!coeff) return std::nullopt;
  Vector out(count_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if ((*coeff)[k].is_zero()) continue;
    for (const auto& [j, t] : transform_[k]) out[j] += (*coeff)[k] * t;
  }
  return out;
}

bool SpanBasis::contains(const Vector& v) const {
  if (count_ == 0) return is_zero(v);
  return reduced_coordinates(v).has_value();
}

// ---------------------------------------------------------------------------
// StructureConstants

Rational StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket(i, j))
    if (idx == k) return c;
  return {};
}

Vector StructureConstants::bracket_coords(const Vector& x, const Vector& y) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 2>> find_antisymmetry_violation(const StructureConstants& sc) {
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = i; j < sc.dim; ++j) {
      const auto& a = sc.bracket(i, j);
      const auto& b = sc.bracket(j, i);
      if (a.size() != b.size()) return std::array{i, j};
      for (const auto& [k, c] : a)
        if (sc.at(j, i, k) != -c) return std::array{i, j};
    }
  return std::nullopt;
}

bool jacobi_holds(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k) {
  Vector acc(sc.dim);
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[b_a, b_b], b_c]
    for (const auto& [l, x] : sc.bracket(a, b))
      for (const auto& [m, y] : sc.bracket(l, c)) acc[m] += x * y;
  };
  add_nested(i, j, k);
  add_nested(j, k, i);
  add_nested(k, i, j);
  return is_zero(acc);
}

std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureConstants& sc) {
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = i + 1; j < sc.dim; ++j)
      for (std::size_t k = j + 1; k < sc.dim; ++k)
        if (!jacobi_holds(sc, i, j, k)) return std::array{i, j, k};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureConstants& sc, std::size_t samples,
                                                                std::mt19937_64& rng) {
  if (sc.dim == 0) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, sc.dim - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (!jacobi_holds(sc, i, j, k)) return std::array{i, j, k};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// MatLieAlgebra

struct MatLieAlgebra::Impl {
  std::string name;
  std::size_t ambient = 0;
  std::vector<Matrix> basis;
  SpanBasis span;

  mutable std::once_flag sc_once;
  mutable StructureConstants sc;
};

// Shared by default-constructed algebras: the zero algebra with no name.
const std::shared_ptr<const MatLieAlgebra::Impl>& MatLieAlgebra::empty_impl() {
  static const auto impl = std::make_shared<const Impl>();
  return impl;
}

MatLieAlgebra::MatLieAlgebra() : impl_(empty_impl()) {}

const std::string& MatLieAlgebra::name() const { return impl_->name; }
std::size_t MatLieAlgebra::ambient_size() const { return impl_->ambient; }
std::size_t MatLieAlgebra::dim() const { return impl_->basis.size(); }
const std::vector<Matrix>& MatLieAlgebra::basis() const { return impl_->basis; }
const Matrix& MatLieAlgebra::basis(std::size_t i) const { return impl_->basis.at(i); }

MatLieAlgebra::MatLieAlgebra(std::string name, std::size_t ambient_size, std::vector<Matrix> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].rows() != ambient_size || basis[i].cols() != ambient_size)
      throw std::invalid_argument(name + ": basis element " + std::to_string(i) + " is not " +
                                  std::to_string(ambient_size) + "x" + std::to_string(ambient_size));
  auto impl = std::make_shared<Impl>();
  impl->span = SpanBasis(basis);
  if (!impl->span.independent())
    throw std::invalid_argument(name + ": basis is linearly dependent (rank " + std::to_string(impl->span.rank()) +
                                " of " + std::to_string(basis.size()) + ")");
  impl->name = std::move(name);
  impl->ambient = ambient_size;
  impl->basis = std::move(basis);
  impl_ = std::move(impl);
}

std::optional<Vector> MatLieAlgebra::coordinates(const Matrix& x) const {
  if (x.rows() != ambient_size() || x.cols() != ambient_size())
    throw std::invalid_argument(name() + ": element has wrong size");
  return impl_->span.coordinates(x.flat());
}

bool MatLieAlgebra::contains(const Matrix& x) const {
  if (x.rows() != ambient_size() || x.cols() != ambient_size()) return false;
  return impl_->span.contains(x.flat());
}

Matrix MatLieAlgebra::element(const Vector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument(name() + ": coordinate vector has wrong length");
  Matrix x(ambient_size(), ambient_size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) x += basis(i) * coords[i];
  return x;
}

const StructureConstants& MatLieAlgebra::structure_constants() const {
  std::call_once(impl_->sc_once, [this] {
    const std::size_t d = dim();
    StructureConstants sc;
    sc.dim = d;
    sc.table.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Matrix b = bracket(basis(i), basis(j));
        if (b.is_zero()) continue;
        const auto coords = impl_->span.coordinates(b.flat());
        if (!coords)
          throw ClosureError(i, j,
                             name() + ": [b" + std::to_string(i) + ", b" + std::to_string(j) + "] is not in the span");
        for (std::size_t k = 0; k < d; ++k)
          if (!(*coords)[k].is_zero()) sc.table[i * d + j].emplace_back(k, (*coords)[k]);
      }
    impl_->sc = std::move(sc);
  });
  return impl_->sc;
}

// ---------------------------------------------------------------------------
// Forms

Rational AlgebraForm::evaluate(const Vector& x, const Vector& y) const { return dot(x, gram * y); }

Rational AlgebraForm::evaluate(const Matrix& x, const Matrix& y) const {
  const auto cx = algebra.coordinates(x);
  const auto cy = algebra.coordinates(y);
  if (!cx || !cy) throw std::invalid_argument("AlgebraForm: argument outside " + algebra.name());
  return evaluate(*cx, *cy);
}

Matrix AlgebraForm::restricted_to(const std::vector<Matrix>& elements) const {
  std::vector<Vector> coords;
  coords.reserve(elements.size());
  for (const auto& e : elements) {
    auto c = algebra.coordinates(e);
    if (!c) throw std::invalid_argument("AlgebraForm: element outside " + algebra.name());
    coords.push_back(std::move(*c));
  }
  Matrix g(elements.size(), elements.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Vector gi = gram * coords[i];
    for (std::size_t j = 0; j < coords.size(); ++j) g(i, j) = dot(gi, coords[j]);
  }
  return g;
}

AlgebraForm killing_form(const MatLieAlgebra& l) {
  const auto& sc = l.structure_constants();
  const std::size_t d = sc.dim;
  // rev[l*d + k] lists (j, c(j,l,k)).
  std::vector<std::vector<StructureConstants::Entry>> rev(d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t m = 0; m < d; ++m)
      for (const auto& [k, c] : sc.bracket(j, m)) rev[m * d + k].emplace_back(j, c);

  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& [m, c1] : sc.bracket(i, k))
        for (const auto& [j, c2] : rev[m * d + k]) gram(i, j) += c1 * c2;
  return {l, std::move(gram)};
}

AlgebraForm trace_form(const MatLieAlgebra& l) {
  const std::size_t d = l.dim();
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Rational t = (l.basis(i) * l.basis(j)).trace();
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return {l, std::move(gram)};
}

std::optional<std::array<std::size_t, 3>> find_ad_invariance_violation(const AlgebraForm& form) {
  const auto& sc = form.algebra.structure_constants();
  const std::size_t d = sc.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Rational s;
        for (const auto& [m, c] : sc.bracket(i, j)) s += c * form.gram(m, k);
        for (const auto& [m, c] : sc.bracket(i, k)) s += c * form.gram(j, m);
        if (!s.is_zero()) return std::array{i, j, k};
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subspaces and maps

std::vector<Matrix> centralizer_in(const MatLieAlgebra& l, const std::vector<Matrix>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].rows() != l.ambient_size() || s[i].cols() != l.ambient_size())
      throw std::invalid_argument("centralizer_in: element " + std::to_string(i) + " does not match the ambient size of " +
                                  l.name());
  return restrict_to_kernel(l.basis(), s.size(), [&](const Matrix& x, std::size_t k) { return bracket(x, s[k]); });
}

namespace {

std::string entry_mismatch(const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << "): " << lhs(r, c) << " != " << rhs(r, c);
        return os.str();
      }
  return "equal";
}

} // namespace

Certificate certify_homomorphism(const LinearAlgebraMap& map) {
  Certificate cert;
  const auto& src = map.source;
  const auto& tgt = map.target;
  if (map.images.size() != src.dim())
    return Certificate::failure({"shape", map.images.size(), src.dim(), "image count differs from source dimension"});
  for (std::size_t i = 0; i < map.images.size(); ++i) {
    ++cert.checks;
    if (!tgt.contains(map.images[i]))
      return Certificate::failure({"span", i, i, "image of b" + std::to_string(i) + " is not in " + tgt.name()},
                                  cert.checks);
  }

  StructureConstants const* sc = nullptr;
  try {
    sc = &src.structure_constants();
  } catch (const ClosureError& e) {
    return Certificate::failure({"closure", e.i, e.j, e.what()}, cert.checks);
  }
  const std::size_t m = tgt.ambient_size();
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      ++cert.checks;
      Matrix lhs(m, m);
      for (const auto& [k, c] : sc->bracket(i, j)) lhs += map.images[k] * c;
      const Matrix rhs = bracket(map.images[i], map.images[j]);
      if (lhs != rhs)
        return Certificate::failure({"bracket", i, j, "phi([b_i,b_j]) vs [phi(b_i),phi(b_j)]: " + entry_mismatch(lhs, rhs)},
                                    cert.checks);
    }

  ++cert.checks;
  std::vector<Vector> flat;
  for (const auto& x : map.images) flat.push_back(x.flat());
  const Matrix cols = Matrix::from_columns(m * m, flat);
  const auto ker = kernel_basis(cols);
  if (!ker.empty()) {
    std::ostringstream os;
    os << "kernel vector (";
    for (std::size_t k = 0; k < ker[0].size(); ++k) os << (k ? "," : "") << ker[0][k];
    os << ")";
    std::size_t first = 0;
    while (ker[0][first].is_zero()) ++first;
    return Certificate::failure({"injectivity", first, first, os.str()}, cert.checks);
  }
  return cert;
}

namespace {

std::vector<Vector> coordinates_of(const MatLieAlgebra& l, const std::vector<Matrix>& xs, const char* who) {
  std::vector<Vector> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto c = l.coordinates(xs[i]);
    if (!c) throw std::invalid_argument(std::string(who) + ": element " + std::to_string(i) + " is not in " + l.name());
    out.push_back(std::move(*c));
  }
  return out;
}

} // namespace

std::vector<Matrix> killing_orthogonal_complement(const MatLieAlgebra& l, const std::vector<Matrix>& h) {
  const std::size_t d = l.dim();
  if (h.empty()) return l.basis();
  const auto hc = coordinates_of(l, h, "killing_orthogonal_complement");
  Matrix hm(h.size(), d);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) hm(i, k) = hc[i][k];
  if (rank(hm) != h.size()) throw std::invalid_argument("killing_orthogonal_complement: sub-basis is dependent");

  const AlgebraForm k = killing_form(l);
  const Matrix hk = hm * k.gram;             // rows: K(h_i, .)
  const Matrix restricted = hk * hm.transpose(); // K on h
  const auto radical = kernel_basis(restricted);
  if (!radical.empty()) {
    std::vector<Matrix> rad;
    for (const auto& v : radical) {
      Matrix x(l.ambient_size(), l.ambient_size());
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) x += h[i] * v[i];
      rad.push_back(std::move(x));
    }
    throw DegenerateRestrictionError(std::move(rad), "Killing form of " + l.name() +
                                                         " is degenerate on the given subspace (radical dimension " +
                                                         std::to_string(radical.size()) + ")");
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(hk)) out.push_back(l.element(v));
  return out;
}

SymmetricPairCertificate symmetric_pair_check(const MatLieAlgebra& l, const std::vector<Matrix>& h) {
  SymmetricPairCertificate out;
  out.complement = killing_orthogonal_complement(l, h);
  const auto& m = out.complement;
  const SpanBasis hs(h);
  const SpanBasis ms(m);
  auto& cert = out.certificate;

  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      ++cert.checks;
      if (!hs.contains(bracket(h[i], h[j]).flat())) {
        cert = Certificate::failure({"[h,h]", i, j, "bracket of subalgebra elements leaves the subalgebra"}, cert.checks);
        return out;
      }
    }
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      ++cert.checks;
      if (!ms.contains(bracket(h[i], m[j]).flat())) {
        cert = Certificate::failure({"[h,m]", i, j, "bracket of subalgebra and complement leaves the complement"},
                                    cert.checks);
        return out;
      }
    }
  std::vector<Vector> mm;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      ++cert.checks;
      Matrix b = bracket(m[i], m[j]);
      if (!hs.contains(b.flat())) {
        cert = Certificate::failure({"[m,m]", i, j, "bracket of complement elements leaves the subalgebra"}, cert.checks);
        return out;
      }
      if (!b.is_zero()) mm.push_back(b.flat());
    }
  out.complement_bracket_rank = mm.empty() ? 0 : SpanBasis(mm).rank();
  out.complement_brackets_span_subalgebra = out.complement_bracket_rank == h.size();
  return out;
}

} // namespace liecert
