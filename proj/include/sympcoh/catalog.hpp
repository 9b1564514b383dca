#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympcoh/acx.hpp"
#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"
#include "sympcoh/symplectic.hpp"

namespace sympcoh {

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::optional<KForm> default_omega;
  std::optional<Matrix> default_j;
  bool nilpotent = false;
  std::optional<bool> expects_hlc;
  std::string notes;

  std::optional<SymplecticStructure> symplectic() const;
  std::optional<AlmostComplexStructure> almost_complex() const;
};

namespace catalog {

/// Entry names in a fixed order.
const std::vector<std::string>& names();

/// Throws Error on an unknown name.
const CatalogEntry& get(std::string_view name);

bool contains(std::string_view name);

}  // namespace catalog

/// c · φ^a ∧ φ^b (labels 1-based) with a Gaussian rational c = re + i·im.
/// A set conj flag stands for φ̄ in that slot.
struct ComplexTerm {
  Rational re;
  Rational im;
  std::size_t a = 0;
  std::size_t b = 0;
  bool conj_a = false;
  bool conj_b = false;
};

/// dφ^1 .. dφ^m; an empty entry means dφ^j = 0.
using ComplexEquations = std::vector<std::vector<ComplexTerm>>;

/// Real structure equations of dimension 2m under φ^j = e^{2j-1} + i e^{2j}:
/// de^{2j-1} = Re dφ^j and de^{2j} = Im dφ^j. Only (2,0) terms are
/// supported; a conjugated slot throws Error.
LieAlgebra complex_to_real(const ComplexEquations& equations);

}  // namespace sympcoh
