#include "sympcoh/lie_algebra.hpp"

#include <string>

#include "sympcoh/errors.hpp"

namespace sympcoh {

LieAlgebra::LieAlgebra(std::vector<KForm> generator_differentials)
    : differentials_(std::move(generator_differentials)) {
  const std::size_t n = differentials_.size();
  if (n > kMaxGenerators) throw DimensionMismatch("at most 63 generators are supported");
  for (std::size_t i = 0; i < n; ++i) {
    const KForm& d = differentials_[i];
    if (d.ambient_dim() != n)
      throw DimensionMismatch("de^" + std::to_string(i + 1) + " lives in the wrong ambient dimension");
    if (!d.is_zero() && d.degree() != 2)
      throw DimensionMismatch("de^" + std::to_string(i + 1) + " is not a 2-form");
    if (d.is_zero()) differentials_[i] = KForm(n, 2);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(std::vector<KForm>(n, KForm(n, 2))); }

KForm differential(const LieAlgebra& g, const KForm& a) {
  const std::size_t n = g.dim();
  if (a.ambient_dim() != n) throw DimensionMismatch("differential: form and algebra dimensions differ");
  KForm out(n, a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    std::size_t position = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1, ++position) {
      const Mask bit = rest & (~rest + 1);
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(bit));
      const KForm& de = g.generator_differential(i);
      if (de.is_zero()) continue;
      const Mask others = m & ~bit;
      const bool negative = position & 1U;
      for (const auto& [dm, dc] : de.terms()) {
        if (dm & others) continue;
        Rational coeff = c * dc;
        if (negative) coeff = -coeff;
        out.add(dm | others, wedge_sign(dm, others) * coeff);
      }
    }
  }
  return out;
}

std::optional<JacobiFailure> validate(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    KForm dd = differential(g, g.generator_differential(i));
    if (!dd.is_zero()) return JacobiFailure{i + 1, std::move(dd)};
  }
  return std::nullopt;
}

void require_valid(const LieAlgebra& g) {
  if (auto failure = validate(g))
    throw InvalidStructure("Jacobi identity fails: d(de^" + std::to_string(failure->generator) + ") != 0");
}

Matrix d_matrix(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  if (k > n) return Matrix(0, 0);
  return operator_matrix(n, k, k + 1, [&g](const KForm& a) { return differential(g, a); });
}

std::vector<std::size_t> betti(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks(n + 1);
  for (std::size_t k = 0; k <= n; ++k) ranks[k] = rank(d_matrix(g, k));
  std::vector<std::size_t> b(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t closed = binomial(n, k) - ranks[k];
    b[k] = closed - (k == 0 ? 0 : ranks[k - 1]);
  }
  return b;
}

bool is_nilpotent(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return true;
  const Matrix d1 = d_matrix(g, 1);
  const FormBasis two(n, 2);
  Subspace current(n);
  while (true) {
    std::vector<Vector> products;
    const auto& basis = current.basis();
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        KForm fa(n, 1), fb(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
          fa.add(Mask{1} << i, basis[a][i]);
          fb.add(Mask{1} << i, basis[b][i]);
        }
        products.push_back(two.coordinates(wedge(fa, fb)));
      }
    Subspace next = preimage(d1, Subspace::span(two.size(), products));
    if (next.dim() == n) return true;
    if (next.dim() == current.dim()) return false;
    current = std::move(next);
  }
}

}  // namespace sympcoh
