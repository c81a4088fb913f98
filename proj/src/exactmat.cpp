#include "liecert/exactmat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace liecert {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  m.data_ = v;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vector& flat) {
  if (flat.size() != rows * cols) throw std::invalid_argument("Matrix::unflatten: size mismatch");
  Matrix m(rows, cols);
  m.data_ = flat;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += x.is_zero() ? 0 : 1;
  return n;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_)
    if (!x.is_zero()) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  // Row-of-B lists of nonzeros make products of sparse operands cheap.
  std::vector<std::vector<std::size_t>> b_nz(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) b_nz[k].push_back(j);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : b_nz[k]) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * vector: shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vector +: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out(v);
  for (auto& x : out)
    if (!x.is_zero()) x *= s;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(r, k));
    if (m(r, c) != Rational(1)) {
      const Rational inv = Rational(1) / m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(r, k).is_zero()) m(r, k) *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t k = c + 1; k < cols; ++k)
      if (!m(r, k).is_zero()) nz.push_back(k);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      m(i, c) = Rational();
      for (std::size_t k : nz) m(i, k) -= f * m(r, k);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      const Rational& x = rr.reduced(i, free);
      if (!x.is_zero()) v[rr.pivot_columns[i]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A has " + std::to_string(a.rows()) +
                                                        " rows but b has length " + std::to_string(b.size()));
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  const RrefResult rr = rref(std::move(aug));
  if (!rr.pivot_columns.empty() && rr.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivot_columns[i]] = rr.reduced(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  RrefResult rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

std::vector<Matrix> restrict_to_kernel(std::vector<Matrix> candidates, std::size_t constraint_count,
                                       const std::function<Matrix(const Matrix&, std::size_t)>& op) {
  for (std::size_t s = 0; s < constraint_count && !candidates.empty(); ++s) {
    std::vector<Vector> images;
    images.reserve(candidates.size());
    for (const auto& c : candidates) images.push_back(op(c, s).flat());
    const Matrix system = Matrix::from_columns(images.front().size(), images);
    const auto ker = kernel_basis(system);
    if (ker.size() == candidates.size()) continue;
    std::vector<Matrix> next;
    next.reserve(ker.size());
    for (const auto& v : ker) {
      Matrix combo(candidates.front().rows(), candidates.front().cols());
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) combo += candidates[j] * v[j];
      next.push_back(std::move(combo));
    }
    candidates = std::move(next);
  }
  return candidates;
}

Congruence congruent_diagonalize(const Matrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("congruent_diagonalize: matrix is not symmetric");
  const std::size_t n = s.rows();
  Matrix d = s;
  Matrix p = Matrix::identity(n);

  // Each step applies a column operation E on the right and its transpose on
  // the left, so D = P^T S P is preserved with P <- P E.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    // e_target <- e_target + f * e_source
    for (std::size_t r = 0; r < n; ++r)
      if (!d(r, source).is_zero()) d(r, target) += f * d(r, source);
    for (std::size_t c = 0; c < n; ++c)
      if (!d(source, c).is_zero()) d(target, c) += f * d(source, c);
    for (std::size_t r = 0; r < n; ++r)
      if (!p(r, source).is_zero()) p(r, target) += f * p(r, source);
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (d(k, k).is_zero()) {
      std::size_t diag = k + 1;
      while (diag < n && d(diag, diag).is_zero()) ++diag;
      if (diag < n) {
        swap_basis(k, diag);
      } else {
        // All remaining diagonal entries vanish; look for an off-diagonal one.
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (!d(i, j).is_zero()) {
              add_multiple(i, j, Rational(1)); // new d(i,i) = 2 d(i,j)
              swap_basis(k, i);
              found = true;
            }
        if (!found) break; // remaining block is zero
      }
    }
    const Rational pivot = d(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (d(k, j).is_zero()) continue;
      add_multiple(j, k, -(d(k, j) / pivot));
    }
  }
  return {std::move(d), std::move(p)};
}

std::string Signature::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(null) + ")";
}

Signature signature(const Matrix& s) {
  const Congruence c = congruent_diagonalize(s);
  Signature sig;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const int sg = c.diagonal(i, i).sign();
    if (sg > 0)
      ++sig.positive;
    else if (sg < 0)
      ++sig.negative;
    else
      ++sig.null;
  }
  return sig;
}

} // namespace liecert
