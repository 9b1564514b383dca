#include "sympcoh/acx.hpp"

#include "sympcoh/errors.hpp"

namespace sympcoh {

std::optional<AcsDefect> validate_acs(const LieAlgebra& g, const Matrix& j) {
  const std::size_t n = g.dim();
  if (j.rows() != n || j.cols() != n)
    return AcsDefect{"J must be " + std::to_string(n) + "x" + std::to_string(n), std::nullopt};
  if (n % 2 != 0) return AcsDefect{"odd dimension admits no almost-complex structure", std::nullopt};
  const Matrix square = j * j;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const Rational expected = r == c ? -1 : 0;
      if (square(r, c) != expected)
        return AcsDefect{"J^2 != -1 in column " + std::to_string(c + 1), c + 1};
    }
  return std::nullopt;
}

AlmostComplexStructure AlmostComplexStructure::make(LieAlgebra g, Matrix j) {
  if (auto defect = validate_acs(g, j)) throw InvalidStructure("invalid almost-complex structure: " + defect->message);
  AlmostComplexStructure a;
  a.algebra_ = std::move(g);
  a.j_ = std::move(j);
  return a;
}

Matrix standard_j(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  return j;
}

const char* to_string(Compatibility c) {
  switch (c) {
    case Compatibility::compatible:
      return "compatible";
    case Compatibility::tamed_only:
      return "tamed_only";
    case Compatibility::neither:
      return "neither";
  }
  return "neither";
}

namespace {

// Sylvester's criterion on a symmetric matrix.
bool positive_definite(const Matrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = g(r, c);
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

}  // namespace

Compatibility compatibility(const KForm& omega, const Matrix& j) {
  const std::size_t n = omega.ambient_dim();
  if (j.rows() != n || j.cols() != n) throw DimensionMismatch("compatibility: J and omega dimensions differ");
  const Matrix w = two_form_matrix(omega);
  const bool invariant = j.transpose() * w * j == w;
  const Matrix g = w * j;  // g(e_r, e_c) = ω(e_r, J e_c)
  const Matrix symmetrized = Rational(1, 2) * (g + g.transpose());
  if (invariant && positive_definite(g)) return Compatibility::compatible;
  if (positive_definite(symmetrized)) return Compatibility::tamed_only;
  return Compatibility::neither;
}

Compatibility compatibility(const SymplecticStructure& s, const AlmostComplexStructure& a) {
  if (s.dim() != a.algebra().dim()) throw DimensionMismatch("compatibility: structures on different dimensions");
  return compatibility(s.omega(), a.j());
}

Subspace pure_type_subspace(const AlmostComplexStructure& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.algebra().dim();
  const std::size_t k = p + q;
  if (k > n) throw DimensionMismatch("pure_type_subspace: p+q exceeds the dimension");
  const FormBasis basis(n, k);
  const Matrix& j = a.j();
  if (k == 2) {
    // Degree 2: (1,1) is the +1 eigenspace of the J action, (2,0)+(0,2) the -1 one.
    const Matrix action = operator_matrix(n, 2, 2, [&j](const KForm& f) { return j_action(j, f); });
    const Rational eigenvalue = p == q ? 1 : -1;
    return kernel(action - eigenvalue * Matrix::identity(basis.size()));
  }
  // In general the derivation extension of J acts on (p,q)-forms by i(p-q),
  // so the real (p,q)+(q,p) forms are the kernel of D² + (p-q)².
  const Matrix derivation = operator_matrix(n, k, k, [&j](const KForm& f) { return j_derivation(j, f); });
  const long weight = static_cast<long>(p) - static_cast<long>(q);
  return kernel(derivation * derivation + Rational(weight * weight) * Matrix::identity(basis.size()));
}

PureTypeGroup h_j(const AlmostComplexStructure& a, std::size_t p, std::size_t q, bool with_representatives) {
  const LieAlgebra& g = a.algebra();
  const std::size_t n = g.dim();
  const std::size_t k = p + q;
  const Subspace pure = pure_type_subspace(a, p, q);
  const Subspace closed = kernel(d_matrix(g, k));
  const Subspace exact = k == 0 ? Subspace(1) : image(d_matrix(g, k - 1));
  const Subspace cycles = intersect(closed, pure);
  const Subspace trivial = intersect(cycles, exact);

  PureTypeGroup out;
  out.p = p;
  out.q = q;
  out.dim = quotient_dim(cycles, trivial);
  if (with_representatives) {
    const FormBasis basis(n, k);
    Subspace spanned = trivial;
    for (const auto& v : cycles.basis()) {
      if (spanned.contains(v)) continue;
      spanned = sum(spanned, Subspace::span(basis.size(), {v}));
      out.representatives.push_back(basis.form(v));
    }
  }
  return out;
}

PureFull pure_full_check(const AlmostComplexStructure& a) {
  const LieAlgebra& g = a.algebra();
  PureFull out;
  if (g.dim() < 2) {
    out.pure = out.full = true;
    return out;
  }
  const Subspace closed = kernel(d_matrix(g, 2));
  const Subspace exact = image(d_matrix(g, 1));
  const Subspace plus = sum(intersect(closed, pure_type_subspace(a, 1, 1)), exact);
  const Subspace minus = sum(intersect(closed, pure_type_subspace(a, 2, 0)), exact);
  out.h_invariant = quotient_dim(plus, exact);
  out.h_anti_invariant = quotient_dim(minus, exact);
  out.b2 = quotient_dim(closed, exact);
  out.pure = intersect(plus, minus) == exact;
  out.full = sum(plus, minus) == closed;
  return out;
}

}  // namespace sympcoh
