#include "sympcoh/symplectic.hpp"

#include "sympcoh/errors.hpp"
#include "sympcoh/parser.hpp"

namespace sympcoh {

Matrix two_form_matrix(const KForm& omega) {
  const std::size_t n = omega.ambient_dim();
  Matrix w(n, n);
  if (omega.is_zero()) return w;
  if (omega.degree() != 2) throw DimensionMismatch("expected a 2-form");
  for (const auto& [m, c] : omega.terms()) {
    const auto idx = indices_of(m);
    const auto i = static_cast<std::size_t>(idx[0] - 1);
    const auto j = static_cast<std::size_t>(idx[1] - 1);
    w(i, j) = c;
    w(j, i) = -c;
  }
  return w;
}

SymplecticStructure SymplecticStructure::make(LieAlgebra g, KForm omega) {
  require_valid(g);
  const std::size_t n = g.dim();
  if (omega.ambient_dim() != n) throw DimensionMismatch("omega and algebra dimensions differ");
  if (!omega.is_zero() && omega.degree() != 2) throw InvalidStructure("omega is not a 2-form");
  KForm residual = differential(g, omega);
  if (!residual.is_zero()) throw InvalidStructure("omega is not closed: d(omega) = " + render_form(residual));
  if (n % 2 != 0 || omega.is_zero()) throw InvalidStructure("omega is degenerate (omega^n = 0)");

  KForm power = KForm::constant(n, 1);
  Rational factorial = 1;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    power = wedge(power, omega);
    factorial *= static_cast<unsigned long>(i);
  }
  if (power.is_zero()) throw InvalidStructure("omega is degenerate (omega^n = 0)");

  SymplecticStructure s;
  s.algebra_ = std::move(g);
  s.omega_ = std::move(omega);
  s.omega_matrix_ = two_form_matrix(s.omega_);
  s.poisson_matrix_ = inverse(s.omega_matrix_);
  s.poisson_ = Bivector::from_antisymmetric(s.poisson_matrix_);
  const Mask top = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  s.volume_factor_ = power.coeff(top) / factorial;
  return s;
}

KForm lefschetz(const SymplecticStructure& s, const KForm& a) { return wedge(s.omega(), a); }

KForm lambda(const SymplecticStructure& s, const KForm& a) { return contract(s.poisson(), a); }

KForm star(const SymplecticStructure& s, const KForm& a) {
  const std::size_t n = s.dim();
  if (a.ambient_dim() != n) throw DimensionMismatch("star: ambient dimensions differ");
  if (a.degree() > n) return KForm(n, 0);
  const Mask top = (Mask{1} << n) - 1;
  // Coefficient of e^J in the pullback of e^I along P^T is det P[J, I].
  const Matrix pt = s.poisson_matrix().transpose();
  KForm out(n, n - a.degree());
  for (const auto& [mi, ci] : a.terms()) {
    KForm pairing = linear_pullback(pt, KForm::basis(n, mi));
    for (const auto& [mj, g] : pairing.terms()) {
      const Mask complement = top & ~mj;
      out.add(complement, wedge_sign(mj, complement) * s.volume_factor() * g * ci);
    }
  }
  return out;
}

KForm d_lambda(const SymplecticStructure& s, const KForm& a) {
  const LieAlgebra& g = s.algebra();
  if (a.degree() == 0) return KForm(a.ambient_dim(), 0);
  KForm first = differential(g, lambda(s, a));
  KForm second = lambda(s, differential(g, a));
  if (first.is_zero()) return -second;
  return first - second;
}

SymplecticComplex::SymplecticComplex(const SymplecticStructure& s) : structure_(&s) {
  const std::size_t n = s.dim();
  const LieAlgebra& g = s.algebra();
  d_.reserve(n + 2);
  d_.emplace_back(1, 0);  // Λ^{-1} -> Λ^0
  for (std::size_t k = 0; k <= n; ++k) d_.push_back(d_matrix(g, k));
  d_lambda_.reserve(n + 2);
  d_lambda_.emplace_back(0, 1);  // Λ^0 -> Λ^{-1}
  for (std::size_t k = 1; k <= n; ++k)
    d_lambda_.push_back(operator_matrix(n, k, k - 1, [&s](const KForm& a) { return sympcoh::d_lambda(s, a); }));
  d_lambda_.emplace_back(1, 0);  // Λ^{n+1} -> Λ^n
}

std::size_t SymplecticComplex::space_dim(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) > top_degree()) return 0;
  return binomial(top_degree(), static_cast<std::size_t>(k));
}

const Matrix& SymplecticComplex::d(int k) const {
  if (k < -1 || k > static_cast<int>(top_degree())) throw DimensionMismatch("d: degree out of range");
  return d_[static_cast<std::size_t>(k + 1)];
}

const Matrix& SymplecticComplex::d_lambda(int k) const {
  if (k < 0 || k > static_cast<int>(top_degree()) + 1) throw DimensionMismatch("d_lambda: degree out of range");
  return d_lambda_[static_cast<std::size_t>(k)];
}

Matrix SymplecticComplex::dd_lambda(int k) const { return d(k - 1) * d_lambda(k); }

Matrix SymplecticComplex::lefschetz_power(std::size_t k, std::size_t power) const {
  const std::size_t n = top_degree();
  KForm omega_power = KForm::constant(n, 1);
  for (std::size_t i = 0; i < power; ++i) omega_power = wedge(omega_power, structure_->omega());
  if (k + 2 * power > n) return Matrix(0, space_dim(static_cast<int>(k)));
  return operator_matrix(n, k, k + 2 * power, [&omega_power](const KForm& a) { return wedge(omega_power, a); });
}

Subspace SymplecticComplex::closed(int k) const { return kernel(d(k)); }
Subspace SymplecticComplex::exact(int k) const { return image(d(k - 1)); }
Subspace SymplecticComplex::dlambda_closed(int k) const { return kernel(d_lambda(k)); }
Subspace SymplecticComplex::dlambda_exact(int k) const { return image(d_lambda(k + 1)); }
Subspace SymplecticComplex::bottchern_cycles(int k) const { return intersect(closed(k), dlambda_closed(k)); }
Subspace SymplecticComplex::bottchern_boundaries(int k) const { return image(dd_lambda(k)); }
Subspace SymplecticComplex::aeppli_cycles(int k) const { return kernel(dd_lambda(k)); }
Subspace SymplecticComplex::aeppli_boundaries(int k) const { return sum(exact(k), dlambda_exact(k)); }

std::size_t h_de_rham(const SymplecticComplex& c, std::size_t k) {
  const int deg = static_cast<int>(k);
  return quotient_dim(c.closed(deg), c.exact(deg));
}

std::size_t h_dlambda(const SymplecticComplex& c, std::size_t k) {
  const int deg = static_cast<int>(k);
  return quotient_dim(c.dlambda_closed(deg), c.dlambda_exact(deg));
}

std::size_t h_bottchern(const SymplecticComplex& c, std::size_t k) {
  const int deg = static_cast<int>(k);
  return quotient_dim(c.bottchern_cycles(deg), c.bottchern_boundaries(deg));
}

std::size_t h_aeppli(const SymplecticComplex& c, std::size_t k) {
  const int deg = static_cast<int>(k);
  return quotient_dim(c.aeppli_cycles(deg), c.aeppli_boundaries(deg));
}

std::size_t h_dlambda(const SymplecticStructure& s, std::size_t k) { return h_dlambda(SymplecticComplex(s), k); }
std::size_t h_bottchern(const SymplecticStructure& s, std::size_t k) { return h_bottchern(SymplecticComplex(s), k); }
std::size_t h_aeppli(const SymplecticStructure& s, std::size_t k) { return h_aeppli(SymplecticComplex(s), k); }

NaturalMaps natural_map_ranks(const SymplecticComplex& c, std::size_t k) {
  const int deg = static_cast<int>(k);
  const Matrix id = Matrix::identity(c.space_dim(deg));
  const Subspace closed = c.closed(deg);
  const Subspace exact = c.exact(deg);
  NaturalMaps out;
  out.bc_to_dr = induced_map_rank(id, c.bottchern_cycles(deg), c.bottchern_boundaries(deg), closed, exact);
  out.dr_to_a = induced_map_rank(id, closed, exact, c.aeppli_cycles(deg), c.aeppli_boundaries(deg));
  return out;
}

NaturalMaps natural_map_ranks(const SymplecticStructure& s, std::size_t k) {
  return natural_map_ranks(SymplecticComplex(s), k);
}

InducedRank lefschetz_on_cohomology(const SymplecticComplex& c, std::size_t j) {
  const std::size_t n = c.structure().half_dim();
  if (j > n) throw DimensionMismatch("Lefschetz power exceeds the half dimension");
  const int from = static_cast<int>(n - j);
  const int to = static_cast<int>(n + j);
  return induced_map_rank(c.lefschetz_power(n - j, j), c.closed(from), c.exact(from), c.closed(to), c.exact(to));
}

CohomologyReport report(const SymplecticStructure& s) {
  const SymplecticComplex c(s);
  CohomologyReport out;
  out.half_dim = s.half_dim();
  out.ddlambda_lemma = true;
  for (std::size_t k = 0; k <= s.dim(); ++k) {
    DegreeRow row;
    row.k = k;
    row.b = h_de_rham(c, k);
    row.h_dlambda = h_dlambda(c, k);
    row.h_bc = h_bottchern(c, k);
    row.h_a = h_aeppli(c, k);
    row.delta_tilde = static_cast<long>(row.h_bc) - static_cast<long>(row.b);
    row.delta = 2 * row.delta_tilde;
    row.maps = natural_map_ranks(c, k);
    if (row.delta_tilde != 0) out.ddlambda_lemma = false;
    out.rows.push_back(row);
  }
  out.hlc = true;
  for (std::size_t j = 0; j <= s.half_dim(); ++j) {
    const InducedRank l = lefschetz_on_cohomology(c, j);
    out.lefschetz_ranks.push_back(l.rank);
    out.lefschetz_bijective.push_back(l.bijective());
    if (!l.bijective()) out.hlc = false;
  }
  return out;
}

}  // namespace sympcoh
