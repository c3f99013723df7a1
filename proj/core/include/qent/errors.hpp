#pragma once

#include <stdexcept>
#include <string>

namespace qent {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquareError : Error {
  using Error::Error;
};

/// Thrown when a matrix fails the Hermitian check; carries the worst
/// asymmetry max |a_ij - conj(a_ji)| that was observed.
struct NotHermitianError : Error {
  NotHermitianError(const std::string& what, double asymmetry)
      : Error(what), max_asymmetry(asymmetry) {}
  double max_asymmetry;
};

struct NoConvergenceError : Error {
  using Error::Error;
};

struct ZeroStateError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A measure that divides by (d - 1) was asked for a d = 1 system.
struct DegenerateDimensionError : Error {
  using Error::Error;
};

struct WrongDimensionError : Error {
  using Error::Error;
};

/// Two algebraically equivalent computation paths disagreed beyond the
/// configured threshold. Indicates a bug, not bad input.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

/// Malformed text input (amplitude files, inline coefficient lists).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qent
