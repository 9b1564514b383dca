#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "sympcoh/errors.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"
#include "sympcoh/parser.hpp"
#include "sympcoh/symplectic.hpp"

using namespace sympcoh;
using testing_support::random_matrix;

TEST_SUITE("linalg") {

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 4)) == 0);
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}, {Rational(1, 2), 1, Rational(3, 2)}}) == 1);
  CHECK(rank(Matrix{{Rational(1, 3), Rational(1, 2)}, {Rational(2, 7), Rational(-5, 11)}}) == 2);
}

TEST_CASE("rank of d on Kodaira 1-forms is 1") {
  const LieAlgebra g = parse_salamon("(0,0,0,23)");
  CHECK(rank(d_matrix(g, 1)) == 1);
}

TEST_CASE("kernel basics") {
  const Subspace full = kernel(Matrix(3, 4));
  CHECK(full.dim() == 4);
  CHECK(full == Subspace::full(4));
  CHECK(kernel(Matrix::identity(3)).dim() == 0);

  const Subspace k = kernel(Matrix{{1, 1, 0}, {0, 0, 1}});
  REQUIRE(k.dim() == 1);
  // Leading entry normalized to 1.
  CHECK(k.basis()[0] == Vector{1, -1, 0});
}

TEST_CASE("closed 2-forms of Kodaira: everything except e14") {
  const LieAlgebra g = parse_salamon("(0,0,0,23)");
  const FormBasis basis(4, 2);
  const Subspace closed = kernel(d_matrix(g, 2));
  CHECK(closed.dim() == 5);
  for (const char* text : {"12", "13", "23", "24", "34"})
    CHECK(closed.contains(basis.coordinates(parse_form(text, 4))));
  CHECK_FALSE(closed.contains(basis.coordinates(parse_form("14", 4))));
}

TEST_CASE("intersection and sum") {
  const Subspace x = Subspace::span(3, {{1, 0, 0}});
  const Subspace y = Subspace::span(3, {{0, 1, 0}});
  CHECK(intersect(x, x).dim() == 1);
  CHECK(intersect(x, y).dim() == 0);
  CHECK(sum(x, Subspace(3)) == x);
  CHECK(sum(x, y).dim() == 2);
  CHECK_THROWS_AS(intersect(x, Subspace(4)), DimensionMismatch);
  CHECK_THROWS_AS(sum(x, Subspace(2)), DimensionMismatch);
}

TEST_CASE("Kodaira Bott-Chern cycles exceed boundaries by 5") {
  const auto s = SymplecticStructure::make(parse_salamon("(0,0,0,23)"), parse_form("12+34", 4));
  const SymplecticComplex c(s);
  const Subspace cycles = intersect(c.closed(2), c.dlambda_closed(2));
  CHECK(cycles.dim() - c.bottchern_boundaries(2).dim() == 5);
}

TEST_CASE("g41 Aeppli group in degree 2 has dimension 4") {
  const auto s = SymplecticStructure::make(parse_salamon("(0,0,12,13)"), parse_form("14+23", 4));
  const SymplecticComplex c(s);
  const Subspace boundaries = sum(c.exact(2), c.dlambda_exact(2));
  CHECK(c.aeppli_cycles(2).dim() - boundaries.dim() == 4);
}

TEST_CASE("quotient_dim checks containment") {
  const Subspace x = Subspace::span(3, {{1, 0, 0}});
  const Subspace xy = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  CHECK(quotient_dim(xy, x) == 1);
  CHECK_THROWS_AS(quotient_dim(x, xy), NotASubspace);
}

TEST_CASE("induced_map_rank") {
  const Subspace v = Subspace::full(3);
  const Subspace w = Subspace::span(3, {{1, 1, 1}});
  const InducedRank id = induced_map_rank(Matrix::identity(3), v, w, v, w);
  CHECK(id.rank == 2);
  CHECK(id.bijective());
  const InducedRank zero = induced_map_rank(Matrix(3, 3), v, w, v, w);
  CHECK(zero.rank == 0);
  CHECK_FALSE(zero.injective);
  // The identity does not send span{e1} into span{e2}.
  const Subspace e1 = Subspace::span(3, {{1, 0, 0}});
  const Subspace e2 = Subspace::span(3, {{0, 1, 0}});
  CHECK_THROWS_AS(induced_map_rank(Matrix::identity(3), e1, Subspace(3), e2, Subspace(3)), NotASubspace);
}

TEST_CASE("Kodaira H2 Bott-Chern to de Rham has rank 4 and is not injective") {
  const auto s = SymplecticStructure::make(parse_salamon("(0,0,0,23)"), parse_form("12+34", 4));
  const NaturalMaps maps = natural_map_ranks(s, 2);
  CHECK(maps.bc_to_dr.rank == 4);
  CHECK(maps.bc_to_dr.source_dim == 5);
  CHECK_FALSE(maps.bc_to_dr.injective);
  CHECK(maps.bc_to_dr.surjective);
}

TEST_CASE("determinant and inverse") {
  const Matrix m{{2, 1}, {7, 4}};
  CHECK(determinant(m) == 1);
  CHECK(inverse(m) * m == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), InvalidStructure);
}

TEST_CASE("rank and kernel agree with the Gauss-Jordan oracle on random 6x6 matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> rank_pick(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    // Build low-rank matrices too, as products of thin factors.
    const std::size_t r = static_cast<std::size_t>(rank_pick(rng));
    const Matrix m = trial % 2 == 0 ? random_matrix(rng, 6, 6)
                                    : random_matrix(rng, 6, r, -3, 3) * random_matrix(rng, r, 6, -3, 3);
    const std::size_t expected = oracle::rank(oracle::to_dense(m));
    CHECK(rank(m) == expected);
    CHECK(rank(m.transpose()) == expected);
    const Subspace k = kernel(m);
    CHECK(k.dim() == 6 - expected);
    for (const Vector& v : k.basis()) {
      const Vector image = m.apply(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return sgn(x) == 0; }));
    }
  }
}

TEST_CASE("dimension formula and order independence") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> count(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> av, bv;
    const int na = count(rng), nb = count(rng);
    for (int i = 0; i < na; ++i) av.push_back(random_matrix(rng, 1, 5, -2, 2).row(0));
    for (int i = 0; i < nb; ++i) bv.push_back(random_matrix(rng, 1, 5, -2, 2).row(0));
    const Subspace a = Subspace::span(5, av);
    const Subspace b = Subspace::span(5, bv);
    CHECK(intersect(a, b).dim() + sum(a, b).dim() == a.dim() + b.dim());
    CHECK(intersect(a, b) == intersect(b, a));
    std::reverse(av.begin(), av.end());
    CHECK(Subspace::span(5, av) == a);
  }
}

}  // TEST_SUITE
