#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sympcoh/linalg.hpp"
#include "sympcoh/rational.hpp"

namespace sympcoh {

/// Multi-index e^{i1...ik} as a bitmask: generator i (1-based) is bit i-1.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGenerators = 63;

inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

/// Sign of e^a ∧ e^b for disjoint masks: (-1)^(number of pairs i∈a, j∈b with i > j).
int wedge_sign(Mask a, Mask b);

/// Ascending 1-based generator labels of a mask.
std::vector<int> indices_of(Mask m);

/// Homogeneous exterior form with exact coefficients. Zero coefficients are
/// never stored; the degree is kept explicitly so zero forms stay typed.
/// A zero form may carry a degree above the ambient dimension (e.g. a
/// wedge overflowing the top degree); nonzero forms never do.
class KForm {
 public:
  using Terms = std::map<Mask, Rational>;

  KForm() = default;
  KForm(std::size_t ambient_dim, std::size_t degree);

  static KForm constant(std::size_t ambient_dim, const Rational& value);
  static KForm basis(std::size_t ambient_dim, Mask mask, const Rational& coeff = 1);
  /// e^{i1} ∧ ... ∧ e^{ik} for 1-based labels in any order; sign-normalized.
  /// Zero if a label repeats.
  static KForm monomial(std::size_t ambient_dim, std::initializer_list<int> labels, const Rational& coeff = 1);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(Mask m) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·e^mask. Throws DimensionMismatch on a wrong-degree or out-of-range mask.
  void add(Mask mask, const Rational& c);

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(const Rational& s);
  KForm operator-() const;

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
  /// Zero forms of the same ambient dimension compare equal whatever their degree.
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.terms_.empty());
  }

 private:
  void check_compatible(const KForm& other) const;

  std::size_t ambient_ = 0;
  std::size_t degree_ = 0;
  Terms terms_;
};

KForm wedge(const KForm& a, const KForm& b);

/// Bivector Σ_{i<j} P^{ij} e_i ∧ e_j; only i<j stored (0-based labels).
struct Bivector {
  std::size_t ambient_dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeffs;

  /// Upper triangle of an antisymmetric matrix.
  static Bivector from_antisymmetric(const Matrix& p);
};

/// ι_{e_i}, 0-based i: removes i from e^I with sign (-1)^(position of i - 1).
KForm interior(std::size_t i, const KForm& a);

/// Σ_{i<j} P^{ij} ι_{e_i} ι_{e_j} a. Degree < 2 gives the zero 0-form.
KForm contract(const Bivector& p, const KForm& a);

/// Pullback along the linear map with matrix `map` (map.rows() = a.ambient_dim(),
/// source dimension map.cols()): e^i ↦ Σ_j map(i,j) e^j, extended multiplicatively.
KForm linear_pullback(const Matrix& map, const KForm& a);

/// (Jα)(v1..vk) = α(Jv1..Jvk), i.e. the pullback along J.
KForm j_action(const Matrix& j, const KForm& a);

/// J extended to forms as a derivation: Σ_j e^{i1}∧..∧(J·e^{ij})∧..∧e^{ik}.
/// Acts on complex (p,q)-forms by i(p-q).
KForm j_derivation(const Matrix& j, const KForm& a);

/// Canonical basis of Λ^k(R^n) in lexicographic order of the index tuples.
class FormBasis {
 public:
  FormBasis(std::size_t ambient_dim, std::size_t degree);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<Mask>& masks() const { return masks_; }
  Mask mask(std::size_t index) const { return masks_[index]; }
  std::size_t index_of(Mask m) const { return index_.at(m); }

  Vector coordinates(const KForm& a) const;
  KForm form(std::span<const Rational> coords) const;
  KForm element(std::size_t index) const { return KForm::basis(ambient_, masks_[index]); }

 private:
  std::size_t ambient_;
  std::size_t degree_;
  std::vector<Mask> masks_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// Matrix of a linear operator Λ^k -> Λ^{k'} in the lexicographic bases.
/// Output terms of degree other than `out_degree` must be zero.
Matrix operator_matrix(std::size_t ambient_dim, std::size_t in_degree, std::size_t out_degree,
                       const std::function<KForm(const KForm&)>& op);

/// Binomial coefficient C(n, k) (0 when k > n).
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace sympcoh
