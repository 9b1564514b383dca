#include "sympcoh/linalg.hpp"

#include <algorithm>
#include <utility>

#include "sympcoh/errors.hpp"

namespace sympcoh {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sympcoh::is_zero(x[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!sympcoh::is_zero(a)) y[r] += a * x[c];
    }
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) p(i, j) += aik * bkj;
      }
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix p = m;
  for (auto& x : p.data_) x *= s;
  return p;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Scaling a row by a nonzero integer preserves rank, so clear
  // denominators row by row and eliminate over Z.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) != 0) a[r][c] = x.get_num() * (lcm / x.get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool lead_zero = sgn(a[i][c]) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = pivot * a[i][j];
        if (!lead_zero) t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  Matrix reduced = rref(hstack(m, Matrix::identity(n)), &pivots);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw InvalidStructure("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  return inv;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  std::vector<std::size_t> pivots;
  Matrix reduced = rref(Matrix::from_rows(vectors, ambient_dim), &pivots);
  s.basis_.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(reduced.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector v(ambient_dim);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
  }
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector and subspace ambient dimensions differ");
  Vector rest(v.begin(), v.end());
  for (const auto& b : basis_) {
    auto lead = static_cast<std::size_t>(
        std::find_if(b.begin(), b.end(), [](const Rational& x) { return sgn(x) != 0; }) - b.begin());
    if (sgn(rest[lead]) == 0) continue;
    const Rational f = rest[lead];
    for (std::size_t j = lead; j < ambient_; ++j)
      if (sgn(b[j]) != 0) rest[j] -= f * b[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix reduced = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> columns;
  columns.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(m.column(c));
  return Subspace::span(m.rows(), columns);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  Matrix stacked = hstack(a.basis_matrix(), Rational(-1) * b.basis_matrix());
  Subspace coeffs = kernel(stacked);
  std::vector<Vector> vectors;
  for (const auto& x : coeffs.basis()) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += x[i] * a.basis()[i][j];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  std::vector<Vector> vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vectors);
}

Subspace apply(const Matrix& f, const Subspace& v) {
  if (f.cols() != v.ambient_dim()) throw DimensionMismatch("apply: map domain differs from subspace ambient");
  std::vector<Vector> images;
  images.reserve(v.dim());
  for (const auto& b : v.basis()) images.push_back(f.apply(b));
  return Subspace::span(f.rows(), images);
}

Subspace preimage(const Matrix& f, const Subspace& w) {
  if (f.rows() != w.ambient_dim()) throw DimensionMismatch("preimage: map codomain differs from subspace ambient");
  Matrix stacked = hstack(f, Rational(-1) * w.basis_matrix());
  Subspace solutions = kernel(stacked);
  std::vector<Vector> vectors;
  for (const auto& s : solutions.basis()) vectors.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(f.cols()));
  return Subspace::span(f.cols(), vectors);
}

std::size_t quotient_dim(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("quotient_dim: ambient dimensions differ");
  if (!v.contains(w)) throw NotASubspace("quotient_dim: denominator is not contained in numerator");
  return v.dim() - w.dim();
}

InducedRank induced_map_rank(const Matrix& f, const Subspace& v1, const Subspace& w1, const Subspace& v2,
                             const Subspace& w2) {
  if (f.cols() != v1.ambient_dim() || f.rows() != v2.ambient_dim())
    throw DimensionMismatch("induced_map_rank: map shape does not match the subquotients");
  InducedRank out;
  out.source_dim = quotient_dim(v1, w1);
  out.target_dim = quotient_dim(v2, w2);
  Subspace fv1 = apply(f, v1);
  if (!v2.contains(fv1)) throw NotASubspace("induced_map_rank: f(V1) is not contained in V2");
  if (!w2.contains(apply(f, w1))) throw NotASubspace("induced_map_rank: f(W1) is not contained in W2");
  out.rank = sum(fv1, w2).dim() - w2.dim();
  out.injective = out.rank == out.source_dim;
  out.surjective = out.rank == out.target_dim;
  return out;
}

}  // namespace sympcoh
