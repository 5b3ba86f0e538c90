#pragma once

#include <stdexcept>
#include <string>

namespace qeur {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes or subsystem dimensions are incompatible.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A subsystem label is not present in the layout.
struct UnknownLabel : Error {
  using Error::Error;
};

/// A matrix fails the Hermiticity tolerance required by the operation.
struct NotHermitian : Error {
  using Error::Error;
};

/// A probability vector or table fails nonnegativity/normalization checks.
struct NotADistribution : Error {
  using Error::Error;
};

/// A scalar parameter lies outside its admissible range.
struct DomainError : Error {
  using Error::Error;
};

/// Wrong number of subsystems for the requested construction.
struct InvalidArity : Error {
  using Error::Error;
};

/// Requested rank is outside [1, dim].
struct RankError : Error {
  using Error::Error;
};

/// Conditioning on every subsystem leaves nothing to predict.
struct EmptyRemainder : Error {
  using Error::Error;
};

/// A matrix fails the density-matrix invariants (hermiticity, trace,
/// positivity). The message names the violated invariant.
struct InvalidState : Error {
  using Error::Error;
};

/// A projective measurement's basis is not orthonormal and complete.
struct InvalidMeasurement : Error {
  using Error::Error;
};

/// Filesystem read or write failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qeur
