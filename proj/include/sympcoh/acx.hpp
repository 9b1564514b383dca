#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"
#include "sympcoh/symplectic.hpp"

namespace sympcoh {

/// Why a matrix is not an almost-complex structure.
struct AcsDefect {
  std::string message;
  std::optional<std::size_t> column;  // 1-based offending column of J^2 + I
};

/// Checks that n is even, J is n x n and J^2 = -1 exactly.
std::optional<AcsDefect> validate_acs(const LieAlgebra& g, const Matrix& j);

/// A linear J with J^2 = -1 on the Lie algebra. J e_c = Σ_r J(r, c) e_r.
class AlmostComplexStructure {
 public:
  /// Throws InvalidStructure on a defect reported by validate_acs.
  static AlmostComplexStructure make(LieAlgebra g, Matrix j);

  const LieAlgebra& algebra() const { return algebra_; }
  const Matrix& j() const { return j_; }

 private:
  AlmostComplexStructure() = default;

  LieAlgebra algebra_;
  Matrix j_;
};

/// The standard structure J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}.
Matrix standard_j(std::size_t n);

enum class Compatibility { compatible, tamed_only, neither };

const char* to_string(Compatibility c);

/// Pointwise test of a 2-form against J: compatible iff ω(J·,J·) = ω and
/// g(x,y) = ω(x,Jy) is positive definite; tamed_only iff only the
/// symmetrized g is positive definite. ω need not be closed.
Compatibility compatibility(const KForm& omega, const Matrix& j);
Compatibility compatibility(const SymplecticStructure& s, const AlmostComplexStructure& a);

/// Real forms of degree p+q whose complexification lies in A^{p,q} ⊕ A^{q,p}.
/// Throws DimensionMismatch when p+q exceeds the dimension.
Subspace pure_type_subspace(const AlmostComplexStructure& a, std::size_t p, std::size_t q);

struct PureTypeGroup {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t dim = 0;
  std::vector<KForm> representatives;  // filled only on request
};

/// dim H_J^{(p,q),(q,p)} = dim(Z ∩ P) - dim(Z ∩ P ∩ B) with Z closed,
/// B exact (p+q)-forms and P the pure-type subspace.
PureTypeGroup h_j(const AlmostComplexStructure& a, std::size_t p, std::size_t q,
                  bool with_representatives = false);

struct PureFull {
  bool pure = false;
  bool full = false;
  std::size_t h_invariant = 0;       // h^{(1,1)}
  std::size_t h_anti_invariant = 0;  // h^{(2,0),(0,2)}
  std::size_t b2 = 0;
};

/// C∞-pure: the J-invariant and J-anti-invariant subgroups of H² meet in 0.
/// C∞-full: they span H².
PureFull pure_full_check(const AlmostComplexStructure& a);

}  // namespace sympcoh
