#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "sympcoh/forms.hpp"
#include "sympcoh/linalg.hpp"
#include "sympcoh/rational.hpp"

namespace testing_support {

using sympcoh::KForm;
using sympcoh::Mask;
using sympcoh::Matrix;
using sympcoh::Rational;

/// Nonzero-biased small rational p/q with |p| <= 9, 1 <= q <= 4.
inline Rational random_rational(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  while (true) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (allow_zero || sgn(r) != 0) return r;
  }
}

/// Random k-form on n generators; each basis term present with probability 1/2.
inline KForm random_form(std::mt19937& rng, std::size_t n, std::size_t k) {
  KForm out(n, k);
  std::bernoulli_distribution keep(0.5);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (sympcoh::popcount(m) == k && keep(rng)) out.add(m, random_rational(rng));
  return out;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace testing_support
