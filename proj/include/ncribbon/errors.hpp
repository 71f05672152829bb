#pragma once

#include <stdexcept>
#include <string>

namespace ncribbon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Empty parts list, non-positive part, or degree out of range.
struct InvalidCompositionError : Error {
  using Error::Error;
};

/// Two compositions of different degrees where equal degrees are required.
struct DegreeMismatchError : Error {
  using Error::Error;
};

/// Mixing polynomials from different parameter families.
struct FamilyMismatchError : Error {
  using Error::Error;
};

/// Substituting zero into a variable that occurs with a negative exponent.
struct PoleError : Error {
  using Error::Error;
};

/// An index composition that does not refine the level, or a level pair
/// out of order.
struct LevelError : Error {
  using Error::Error;
};

/// An element arrived in a basis the operation does not accept.
struct BasisError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Coefficients of a nabla image carry both signs; a theorem-violation
/// sentinel, never expected on valid inputs.
struct SignUniformityError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedSpecializationError : Error {
  using Error::Error;
};

}  // namespace ncribbon
