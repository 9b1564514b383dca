#include "sympcoh/catalog.hpp"

#include <algorithm>

#include "sympcoh/errors.hpp"
#include "sympcoh/parser.hpp"

namespace sympcoh {

std::optional<SymplecticStructure> CatalogEntry::symplectic() const {
  if (!default_omega) return std::nullopt;
  return SymplecticStructure::make(algebra, *default_omega);
}

std::optional<AlmostComplexStructure> CatalogEntry::almost_complex() const {
  if (!default_j) return std::nullopt;
  return AlmostComplexStructure::make(algebra, *default_j);
}

LieAlgebra complex_to_real(const ComplexEquations& equations) {
  const std::size_t m = equations.size();
  const std::size_t n = 2 * m;
  std::vector<KForm> differentials(n, KForm(n, 2));
  for (std::size_t j = 0; j < m; ++j) {
    KForm& real_part = differentials[2 * j];
    KForm& imag_part = differentials[2 * j + 1];
    for (const ComplexTerm& t : equations[j]) {
      if (t.conj_a || t.conj_b) throw Error("complex_to_real: only (2,0) terms are supported, found a conjugate");
      if (t.a == 0 || t.b == 0 || t.a > m || t.b > m) throw Error("complex_to_real: label out of range");
      const int xa = static_cast<int>(2 * t.a - 1), ya = static_cast<int>(2 * t.a);
      const int xb = static_cast<int>(2 * t.b - 1), yb = static_cast<int>(2 * t.b);
      // (x_a + i y_a) ∧ (x_b + i y_b) = (x_a x_b - y_a y_b) + i (x_a y_b + y_a x_b)
      const KForm w_re = KForm::monomial(n, {xa, xb}) - KForm::monomial(n, {ya, yb});
      const KForm w_im = KForm::monomial(n, {xa, yb}) + KForm::monomial(n, {ya, xb});
      real_part += t.re * w_re - t.im * w_im;
      imag_part += t.re * w_im + t.im * w_re;
    }
  }
  return LieAlgebra(std::move(differentials));
}

namespace catalog {

namespace {

KForm standard_omega(std::size_t n) {
  KForm omega(n, 2);
  for (std::size_t j = 1; j + 1 <= n; j += 2) omega.add((Mask{1} << (j - 1)) | (Mask{1} << j), 1);
  return omega;
}

CatalogEntry make_entry(std::string name, LieAlgebra g, std::optional<KForm> omega, std::optional<Matrix> j,
                        std::optional<bool> expects_hlc, std::string notes) {
  CatalogEntry e;
  e.name = std::move(name);
  require_valid(g);
  e.nilpotent = is_nilpotent(g);
  e.algebra = std::move(g);
  e.default_omega = std::move(omega);
  e.default_j = std::move(j);
  e.expects_hlc = expects_hlc;
  e.notes = std::move(notes);
  // Validates the structures eagerly so a broken entry fails at startup.
  (void)e.symplectic();
  (void)e.almost_complex();
  return e;
}

LieAlgebra etabeta5_algebra() {
  ComplexEquations eq(5);
  eq[4] = {ComplexTerm{-1, 0, 1, 2}, ComplexTerm{-1, 0, 3, 4}};
  return complex_to_real(eq);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  Matrix g41_j(4, 4);  // J e1 = e4, J e2 = e3
  g41_j(3, 0) = 1;
  g41_j(0, 3) = -1;
  g41_j(2, 1) = 1;
  g41_j(1, 2) = -1;

  out.push_back(make_entry("kodaira", parse_salamon("(0,0,0,23)"), parse_form("12+34", 4), standard_j(4), false,
                           "Kodaira-Thurston nilmanifold, g_{3,1} + g_1; never HLC"));
  out.push_back(make_entry("g1_g34m", parse_salamon("(0,0,-23,24)"), parse_form("12+34", 4), standard_j(4), true,
                           "completely solvable g_1 + g_{3,4}^{-1}; HLC for every invariant symplectic form"));
  out.push_back(make_entry("g41", parse_salamon("(0,0,12,13)"), parse_form("14+23", 4), g41_j, false,
                           "filiform nilmanifold g_{4,1}; never HLC"));
  out.push_back(make_entry("torus4", LieAlgebra::abelian(4), parse_form("12+34", 4), standard_j(4), true,
                           "real 4-torus 4g_1"));
  out.push_back(make_entry("hyperelliptic", parse_salamon("(0,0,-24,23)"), parse_form("12+34", 4), standard_j(4),
                           true, "hyperelliptic surface g_1 + g_{3,3}^0"));
  out.push_back(make_entry("torus8", LieAlgebra::abelian(8), standard_omega(8), standard_j(8), true,
                           "complex 4-torus with its standard complex structure"));
  out.push_back(make_entry("etabeta5", etabeta5_algebra(), std::nullopt, standard_j(10), std::nullopt,
                           "complex nilmanifold with dphi5 = -phi12 - phi34; its closed 2-forms all vanish on "
                           "e9, e10, so no invariant symplectic form exists; the J-compatible 2-form "
                           "sum e^{2j-1,2j} is not closed"));
  return out;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = build();
  return all;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.name);
    return v;
  }();
  return all;
}

bool contains(std::string_view name) {
  const auto& all = entries();
  return std::any_of(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

const CatalogEntry& get(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace catalog

}  // namespace sympcoh
