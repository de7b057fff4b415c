#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "betaword/numbers.hpp"

namespace betaword {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expansion text; `position` is a 0-based byte offset.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// The shifted coefficient sequence fails to sit strictly below the whole one.
struct ParryViolation : Error {
  ParryViolation(const std::string& what, int shift_index)
      : Error(what + " (shift " + std::to_string(shift_index) + ")"), shift(shift_index) {}
  int shift;
};

/// Structurally valid input rejected on semantic grounds (all-zero, beta <= 1, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// A requested tolerance cannot be met at the available precision.
struct PrecisionError : Error {
  using Error::Error;
};

/// Materializing a word would exceed the configured cap.
struct CapExceeded : Error {
  CapExceeded(const std::string& what, BigInt needed)
      : Error(what + " (required length " + needed.str() + ")"), required(std::move(needed)) {}
  BigInt required;
};

/// An iterative numeric procedure failed to settle within its cap.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Queried factor does not occur (often enough) in the observation prefix.
struct AbsentFactor : Error {
  using Error::Error;
};

/// Observation prefix too short for a stable answer.
struct UnstableObservation : Error {
  using Error::Error;
};

}  // namespace betaword
