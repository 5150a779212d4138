#pragma once

#include <stdexcept>
#include <string>

namespace decay {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV rows, parameter files). Message names the line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a record or dataset invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The radius parameterization produced R <= 0 (or another unphysical
/// intermediate); signals an unusable parameter vector during fitting.
class DegenerateParameterization : public Error {
 public:
  using Error::Error;
};

/// A root or fit could not be found under the stated preconditions.
class SolveError : public Error {
 public:
  using Error::Error;
};

/// A potential lacks the min/barrier structure an operation requires.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A trajectory left the representable range; message names the step.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure; message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace decay
