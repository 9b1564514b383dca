#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sympcoh {

/// Exact rational scalar. Always kept in lowest terms by GMP.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// "p/q" or "p"; no decimals. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace sympcoh
