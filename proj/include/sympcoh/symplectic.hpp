#pragma once

#include <cstddef>
#include <vector>

#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"

namespace sympcoh {

/// Closed nondegenerate invariant 2-form on a Lie algebra, with its
/// Poisson bivector (the inverse of the coefficient matrix of ω).
class SymplecticStructure {
 public:
  /// Throws InvalidStructure when g fails Jacobi, ω is not closed (the
  /// message carries dω), or ω^n = 0.
  static SymplecticStructure make(LieAlgebra g, KForm omega);

  const LieAlgebra& algebra() const { return algebra_; }
  const KForm& omega() const { return omega_; }
  std::size_t half_dim() const { return algebra_.dim() / 2; }
  std::size_t dim() const { return algebra_.dim(); }
  /// Antisymmetric W with ω = Σ_{i<j} W_ij e^{ij}.
  const Matrix& omega_matrix() const { return omega_matrix_; }
  /// P = W^{-1}.
  const Matrix& poisson_matrix() const { return poisson_matrix_; }
  const Bivector& poisson() const { return poisson_; }
  /// ω^n/n! = volume_factor · e^{1..2n}.
  const Rational& volume_factor() const { return volume_factor_; }

 private:
  SymplecticStructure() = default;

  LieAlgebra algebra_;
  KForm omega_;
  Matrix omega_matrix_;
  Matrix poisson_matrix_;
  Bivector poisson_;
  Rational volume_factor_;
};

/// Antisymmetric coefficient matrix of a 2-form.
Matrix two_form_matrix(const KForm& omega);

/// L(a) = ω ∧ a
KForm lefschetz(const SymplecticStructure& s, const KForm& a);
/// Λ(a), contraction with the Poisson bivector.
KForm lambda(const SymplecticStructure& s, const KForm& a);
/// Symplectic Hodge star, β ∧ ⋆α = Π(β, α) ω^n/n! with Π the Poisson
/// pairing extended to k-forms by determinants.
KForm star(const SymplecticStructure& s, const KForm& a);
/// d^Λ = dΛ - Λd.
KForm d_lambda(const SymplecticStructure& s, const KForm& a);

/// Operator matrices and subquotient spaces of the invariant complex,
/// computed once per structure. Degrees outside [0, 2n] are empty spaces.
class SymplecticComplex {
 public:
  explicit SymplecticComplex(const SymplecticStructure& s);
  explicit SymplecticComplex(SymplecticStructure&&) = delete;

  const SymplecticStructure& structure() const { return *structure_; }
  std::size_t top_degree() const { return structure_->dim(); }
  std::size_t space_dim(int k) const;

  /// d : Λ^k -> Λ^{k+1}, for k in [-1, 2n].
  const Matrix& d(int k) const;
  /// d^Λ : Λ^k -> Λ^{k-1}, for k in [0, 2n+1].
  const Matrix& d_lambda(int k) const;
  /// d d^Λ restricted to Λ^k.
  Matrix dd_lambda(int k) const;
  /// L^power : Λ^k -> Λ^{k+2·power}.
  Matrix lefschetz_power(std::size_t k, std::size_t power) const;

  Subspace closed(int k) const;            // ker d
  Subspace exact(int k) const;             // Im d
  Subspace dlambda_closed(int k) const;    // ker d^Λ
  Subspace dlambda_exact(int k) const;     // Im d^Λ
  Subspace bottchern_cycles(int k) const;  // ker d ∩ ker d^Λ
  Subspace bottchern_boundaries(int k) const;  // Im d d^Λ
  Subspace aeppli_cycles(int k) const;     // ker d d^Λ
  Subspace aeppli_boundaries(int k) const; // Im d + Im d^Λ

 private:
  const SymplecticStructure* structure_;
  std::vector<Matrix> d_;         // index k+1
  std::vector<Matrix> d_lambda_;  // index k
};

std::size_t h_de_rham(const SymplecticComplex& c, std::size_t k);
std::size_t h_dlambda(const SymplecticComplex& c, std::size_t k);
std::size_t h_bottchern(const SymplecticComplex& c, std::size_t k);
std::size_t h_aeppli(const SymplecticComplex& c, std::size_t k);

std::size_t h_dlambda(const SymplecticStructure& s, std::size_t k);
std::size_t h_bottchern(const SymplecticStructure& s, std::size_t k);
std::size_t h_aeppli(const SymplecticStructure& s, std::size_t k);

/// Identity-induced maps H_BC -> H_dR and H_dR -> H_A in degree k.
struct NaturalMaps {
  InducedRank bc_to_dr;
  InducedRank dr_to_a;
};

NaturalMaps natural_map_ranks(const SymplecticComplex& c, std::size_t k);
NaturalMaps natural_map_ranks(const SymplecticStructure& s, std::size_t k);

/// L^j : H^{n-j}_dR -> H^{n+j}_dR on cohomology.
InducedRank lefschetz_on_cohomology(const SymplecticComplex& c, std::size_t j);

struct DegreeRow {
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t h_dlambda = 0;
  std::size_t h_bc = 0;
  std::size_t h_a = 0;
  long delta = 0;        // Δ^k = 2·Δ̃^k
  long delta_tilde = 0;  // Δ̃^k = h_bc - b
  NaturalMaps maps;
};

struct CohomologyReport {
  std::size_t half_dim = 0;
  std::vector<DegreeRow> rows;                 // k = 0..2n
  std::vector<std::size_t> lefschetz_ranks;    // j = 0..n, rank of L^j on H^{n-j}
  std::vector<bool> lefschetz_bijective;       // j = 0..n
  bool hlc = false;             // every L^j bijective
  bool ddlambda_lemma = false;  // every Δ̃^k = 0
};

CohomologyReport report(const SymplecticStructure& s);

}  // namespace sympcoh
