#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympcoh/catalog.hpp"
#include "sympcoh/forms.hpp"
#include "sympcoh/lie_algebra.hpp"
#include "sympcoh/linalg.hpp"

namespace sympcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSemantic = 1;
inline constexpr int kExitSyntax = 2;
inline constexpr int kExitHypothesis = 3;

/// A resolved input: either a catalog entry or a `key = value` file.
///
///   # comment
///   name  = kodaira                 (optional; catalog defaults for the rest)
///   dim   = 4
///   d     = (0,0,0,23)
///   omega = 12+34
///   J     = [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]
struct InputDocument {
  std::string label;
  LieAlgebra algebra;
  std::optional<KForm> omega;
  std::optional<Matrix> j;
};

/// Parses the text of an input file. Throws ParseError on syntax and
/// InvalidStructure on shape problems (dim vs entry count).
InputDocument parse_input(std::string_view text, std::string label = "input");

/// Resolves a catalog name, otherwise reads the file at `source`.
InputDocument load_input(const std::string& source);

/// `[[a,b],[c,d]]` with rational entries.
Matrix parse_matrix(std::string_view text);

/// `rows = n`, `cols = m`, then n lines of m rationals.
Matrix parse_map_file(std::string_view text);

/// Runs one command line (args exclude the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympcoh::cli
