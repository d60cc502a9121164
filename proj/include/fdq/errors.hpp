#pragma once

#include <stdexcept>
#include <string>

namespace fdq {

// Malformed user input: bad matrices, unknown types, bad JSON, rank mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reflection closure exceeded its root bound.
class NotFiniteTypeError : public InputError {
 public:
  NotFiniteTypeError() : InputError("not finite type") {}
};

// The input is well formed but the requested structure does not exist,
// e.g. X^*(M)^G is not of rank one.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computed quantity violates a mathematical invariant that
// holds for every valid input. Always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Symbolic layer: an expression uses a gamma label with no declaration.
class MissingDeclarationError : public InputError {
 public:
  explicit MissingDeclarationError(const std::string& label)
      : InputError("missing analytic declaration for '" + label + "'") {}
};

// Symbolic layer: a factor is identically zero or otherwise degenerate.
class InvariantViolation : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace fdq
