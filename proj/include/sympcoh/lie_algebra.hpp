#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sympcoh/forms.hpp"
#include "sympcoh/linalg.hpp"

namespace sympcoh {

/// A Lie algebra given by the differentials de^1..de^n of its dual coframe.
/// Construction checks shapes only; the Jacobi identity (d∘d = 0) is
/// checked by validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<KForm> generator_differentials);

  /// The abelian algebra of dimension n (d ≡ 0).
  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return differentials_.size(); }
  /// de^{i+1} for 0-based i.
  const KForm& generator_differential(std::size_t i) const { return differentials_[i]; }
  const std::vector<KForm>& generator_differentials() const { return differentials_; }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<KForm> differentials_;
};

/// Chevalley-Eilenberg differential, extended from the generators as an
/// antiderivation: d(e^I) = Σ_j (-1)^(j-1) e^{i1}∧..∧de^{ij}∧..∧e^{ik}.
KForm differential(const LieAlgebra& g, const KForm& a);

struct JacobiFailure {
  std::size_t generator;  // 1-based
  KForm residual;         // d(de^generator), a nonzero 3-form
};

/// First generator m with d(de^m) ≠ 0, if any.
std::optional<JacobiFailure> validate(const LieAlgebra& g);

/// Throws InvalidStructure with the Jacobi residual when validate() fails.
void require_valid(const LieAlgebra& g);

/// Matrix of d : Λ^k -> Λ^{k+1} in lexicographic bases. For k = n this is
/// the 0 x 1 map; for k outside [0, n] both sides are empty.
Matrix d_matrix(const LieAlgebra& g, std::size_t k);

/// Invariant de Rham Betti numbers b_0..b_n.
std::vector<std::size_t> betti(const LieAlgebra& g);

/// Nilpotency via the ascending series V_0 = 0, V_{j+1} = {α : dα ∈ Λ²V_j};
/// nilpotent iff it reaches all of Λ¹.
bool is_nilpotent(const LieAlgebra& g);

}  // namespace sympcoh
