#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace upknot {

// Error taxonomy mirrored by the command-line tool's exit codes:
//   InputError    -> exit 1 (bad syntax, invalid diagram, unusable request)
//   InternalError -> exit 2 (a mathematical identity the code relies on broke)
// Verification checks that merely *fail* are reported as data, not exceptions.

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : InputError {
  int line;
  SyntaxError(int line_, const std::string& msg)
      : InputError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct DiagramValidationError : InputError {
  std::vector<std::string> violations;
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid diagram:";
    for (const auto& x : v) s += "\n  - " + x;
    return s;
  }
  explicit DiagramValidationError(std::vector<std::string> v)
      : InputError(join(v)), violations(std::move(v)) {}
};

struct EdgeOutOfRangeError : InputError {
  using InputError::InputError;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_divide was asked to perform a division that leaves a remainder
struct NotDivisibleError : InternalError {
  using InternalError::InternalError;
};

// a polynomial expected to have integer exponents kept a half-integer one
struct HalfIntegerExponentError : InternalError {
  using InternalError::InternalError;
};

struct SingularMatrixError : InternalError {
  using InternalError::InternalError;
};

struct DivisionByZeroError : InternalError {
  using InternalError::InternalError;
};

}  // namespace upknot
