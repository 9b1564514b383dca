#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sympcoh/rational.hpp"

namespace sympcoh {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(std::span<const Rational> x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form over Q. `pivots` receives the pivot columns.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

/// Determinant of a square matrix.
Rational determinant(Matrix m);

/// Inverse of a square matrix; throws InvalidStructure when singular.
Matrix inverse(const Matrix& m);

/// Linear subspace of Q^ambient. The basis is stored in reduced row
/// echelon form (leading entry 1, zeros above and below each leading
/// entry), so two equal subspaces always carry identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
/// A ∩ B, from the kernel of the stacked system [A | -B].
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// f(V)
Subspace apply(const Matrix& f, const Subspace& v);
/// {x : f x ∈ W}
Subspace preimage(const Matrix& f, const Subspace& w);

/// dim V - dim W. Throws NotASubspace unless W ⊆ V.
std::size_t quotient_dim(const Subspace& v, const Subspace& w);

struct InducedRank {
  std::size_t rank = 0;
  std::size_t source_dim = 0;  // dim V1/W1
  std::size_t target_dim = 0;  // dim V2/W2
  bool injective = false;
  bool surjective = false;

  bool bijective() const { return injective && surjective; }
};

/// Rank of the map V1/W1 -> V2/W2 induced by f. All four containments
/// (W1 ⊆ V1, W2 ⊆ V2, f(V1) ⊆ V2, f(W1) ⊆ W2) are checked.
InducedRank induced_map_rank(const Matrix& f, const Subspace& v1, const Subspace& w1,
                             const Subspace& v2, const Subspace& w2);

}  // namespace sympcoh
