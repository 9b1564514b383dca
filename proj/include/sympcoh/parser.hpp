#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"

namespace sympcoh {

// Structure-equation ("Salamon") notation and form expressions.
//
//   algebra := '(' entry (',' entry)* ')'
//   entry   := '0' | term (('+'|'-') term)*      with optional leading sign
//   term    := [rational '*'] index
//   index   := digit run, one digit per label     when n <= 9
//            | '[' label ('.' label)* ']'         when n > 9
//   rational:= digits ['/' digits]
//
// Whitespace is ignored. Structure-equation terms must be 2-forms; a form
// expression must use one degree throughout. Index order inside a term is
// free ("32" = -e^{23}); repeated labels are rejected.

LieAlgebra parse_salamon(std::string_view text);

/// Parses a homogeneous form on n generators. "0" yields the zero form of
/// degree `zero_degree`.
KForm parse_form(std::string_view text, std::size_t n, std::size_t zero_degree = 0);

/// Canonical rendering: ascending multi-indices, explicit signs, "c*" only
/// when |c| != 1, "0" for the zero form. Degree-0 forms render as the constant.
std::string render_form(const KForm& a);

/// "(e1,e2,...)" with each entry rendered by render_form.
std::string render_salamon(const LieAlgebra& g);

/// Lexicographic order on multi-indices (the order of FormBasis).
bool lex_less(Mask a, Mask b);

}  // namespace sympcoh
