#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympcoh {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A containment that a quotient or induced map depends on does not hold.
class NotASubspace : public Error {
 public:
  using Error::Error;
};

/// Malformed structure-equation, form, matrix or input-file text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " (at column " + std::to_string(column + 1) + ")"),
        column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Well-formed input that fails a semantic check (Jacobi, closedness,
/// nondegeneracy, J^2 = -1, morphism condition, size limits).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis required by an induced-map computation is false,
/// e.g. the pullback of the target symplectic form is not the source one.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sympcoh
