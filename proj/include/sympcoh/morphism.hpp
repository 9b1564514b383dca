#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sympcoh/acx.hpp"
#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"
#include "sympcoh/symplectic.hpp"

namespace sympcoh {

/// Linear map of Lie algebras source -> target (dims m -> n), stored as the
/// n x m matrix of the map on the Lie algebras. It induces π : X̃ -> X, and
/// the pullback sends target forms to source forms: π*(e^i) = Σ_j M(i,j) e^j.
class LieMorphism {
 public:
  /// Shape check only; the morphism condition is checked by validate_morphism.
  LieMorphism(LieAlgebra source, LieAlgebra target, Matrix matrix);

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  LieAlgebra source_;
  LieAlgebra target_;
  Matrix matrix_;
};

/// First target generator i (1-based) with π*(de^i) ≠ d(π*e^i), if any.
std::optional<std::size_t> validate_morphism(const LieMorphism& f);

/// Throws InvalidStructure when validate_morphism fails.
void require_morphism(const LieMorphism& f);

KForm pullback(const LieMorphism& f, const KForm& a);

/// Matrix of π* : Λ^k(target) -> Λ^k(source).
Matrix pullback_matrix(const LieMorphism& f, std::size_t k);

/// Exact equality π*ω = ω̃.
bool check_pullback_symplectic(const LieMorphism& f, const KForm& omega_target, const KForm& omega_source);

enum class Theory { de_rham, d_lambda, bott_chern, aeppli, pure_type };

struct TheoryDegree {
  Theory theory = Theory::de_rham;
  std::size_t degree = 0;  // p+q for pure_type
  std::size_t p = 0;
  std::size_t q = 0;
};

/// "deRham", "dLambda", "BottChern", "Aeppli" or "J(p,q)". Throws ParseError.
Theory parse_theory(const std::string& name, std::size_t* p = nullptr, std::size_t* q = nullptr);
std::string to_string(const TheoryDegree& t);

/// Structures each side of the morphism may need.
struct MorphismStructures {
  std::optional<SymplecticStructure> target_omega;
  std::optional<SymplecticStructure> source_omega;
  std::optional<AlmostComplexStructure> target_j;
  std::optional<AlmostComplexStructure> source_j;
};

struct InjectivityReport {
  TheoryDegree theory;
  std::size_t source_dim = 0;  // dimension of the group on X (the domain of π*)
  std::size_t target_dim = 0;  // dimension of the group on X̃
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
};

/// Rank of π* between the chosen cohomology groups. Symplectic theories
/// require both ω and π*ω = ω̃ (HypothesisViolation otherwise); J(p,q)
/// requires both almost-complex structures (InvalidStructure otherwise).
InjectivityReport induced_report(const LieMorphism& f, const TheoryDegree& theory,
                                 const MorphismStructures& structures = {});

}  // namespace sympcoh
