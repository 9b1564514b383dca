#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "sympcoh/catalog.hpp"
#include "sympcoh/errors.hpp"
#include "sympcoh/forms.hpp"
#include "sympcoh/morphism.hpp"
#include "sympcoh/symplectic.hpp"

namespace testing_support {

using sympcoh::LieAlgebra;
using sympcoh::SymplecticStructure;

/// λ_ij, the coefficient of e^{ij} (1-based labels, i < j).
inline Rational lambda(const KForm& omega, int i, int j) {
  return omega.coeff((Mask{1} << (i - 1)) | (Mask{1} << (j - 1)));
}

/// The generic nondegeneracy condition stated for each four-dimensional nilpotent family.
inline std::function<bool(const KForm&)> family_condition(const std::string& name) {
  if (name == "kodaira")
    return [](const KForm& w) {
      return sgn(lambda(w, 1, 2) * lambda(w, 3, 4) + lambda(w, 1, 3) * lambda(w, 2, 4)) != 0;
    };
  if (name == "g1_g34m")
    return [](const KForm& w) { return sgn(lambda(w, 1, 2)) != 0 && sgn(lambda(w, 3, 4)) != 0; };
  if (name == "g41")
    return [](const KForm& w) { return sgn(lambda(w, 1, 4)) != 0 && sgn(lambda(w, 2, 3)) != 0; };
  return [](const KForm&) { return true; };
}

/// A random closed invariant 2-form that is nondegenerate and satisfies
/// the family condition, from random combinations of a basis of ker d_2.
inline SymplecticStructure random_symplectic(const LieAlgebra& g, std::mt19937& rng,
                                             const std::function<bool(const KForm&)>& condition) {
  const std::size_t n = g.dim();
  const sympcoh::FormBasis basis(n, 2);
  const sympcoh::Subspace closed = sympcoh::kernel(sympcoh::d_matrix(g, 2));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    sympcoh::Vector coords(basis.size());
    for (const auto& v : closed.basis()) {
      const Rational c = random_rational(rng);
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += c * v[i];
    }
    const KForm omega = basis.form(coords);
    if (!condition(omega)) continue;
    try {
      return SymplecticStructure::make(g, omega);
    } catch (const sympcoh::InvalidStructure&) {
    }
  }
  throw sympcoh::Error("no symplectic form found");
}

/// Lie algebra automorphisms of catalog entries, as pullback matrices
/// (row i = image of e^i). Invertible by construction.
inline std::vector<Matrix> automorphisms(const std::string& name, std::mt19937& rng) {
  std::vector<Matrix> out;
  auto nonzero = [&] { return random_rational(rng, false); };
  for (int trial = 0; trial < 3; ++trial) {
    if (name == "kodaira") {
      const Rational a = nonzero(), b = nonzero();
      Matrix m{{1, 0, 0, 0}, {0, a, 0, 0}, {0, 0, b, 0}, {0, 0, 0, a * b}};
      // e^4 may also pick up closed 1-forms.
      m(3, 0) = random_rational(rng);
      m(3, 1) = random_rational(rng);
      out.push_back(m);
    } else if (name == "g1_g34m") {
      out.push_back(Matrix{{nonzero(), 0, 0, 0}, {0, 1, 0, 0}, {0, 0, nonzero(), 0}, {0, 0, 0, nonzero()}});
    } else if (name == "g41") {
      const Rational a = nonzero(), b = nonzero();
      out.push_back(Matrix{{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, a * b, 0}, {0, 0, 0, a * a * b}});
    } else if (name == "hyperelliptic") {
      const Rational a = nonzero(), c = nonzero();
      out.push_back(Matrix{{a, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, 0}, {0, 0, 0, c}});
    } else if (name == "torus4" || name == "torus8") {
      const std::size_t n = name == "torus4" ? 4 : 8;
      // Unit lower-triangular shear times a diagonal scaling.
      Matrix m = Matrix::identity(n);
      for (std::size_t r = 0; r < n; ++r) {
        m(r, r) = nonzero();
        for (std::size_t c = 0; c < r; ++c) m(r, c) = random_rational(rng);
      }
      out.push_back(m);
    } else if (name == "etabeta5") {
      // Scale φ^1..φ^4 by real a and φ^5 by a².
      const Rational a = nonzero();
      Matrix m = a * Matrix::identity(10);
      m(8, 8) = a * a;
      m(9, 9) = a * a;
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace testing_support
