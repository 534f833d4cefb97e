#pragma once

#include <stdexcept>
#include <string>

namespace crsym {

/// Problem with the user-supplied input (bad polynomial, bad parameters).
/// CLI exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  ParseError(const std::string& msg, size_t pos)
      : InputError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

struct PluriharmonicInput : InputError {
  using InputError::InputError;
};
struct NoFiniteMultitype : InputError {
  using InputError::InputError;
};
struct NotHomogeneous : InputError {
  using InputError::InputError;
};
struct InvalidParams : InputError {
  using InputError::InputError;
};
struct NotMonomialDiagonal : InputError {
  using InputError::InputError;
};
struct NonRealModel : InputError {
  using InputError::InputError;
};
/// A catalog instance turned out holomorphically degenerate.
struct DegenerateInstance : InputError {
  using InputError::InputError;
};
/// A field expression whose coefficients are not holomorphic.
struct AntiholomorphicCoefficient : InputError {
  using InputError::InputError;
};

/// A structural fact the classification guarantees was violated at runtime.
/// CLI exit code 2.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace crsym
