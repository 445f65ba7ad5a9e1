#pragma once

#include <stdexcept>
#include <string>

namespace kspec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A dense solver failed to converge or produced unusable output.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A shifted matrix (sigma*I - A, I - conj(alpha)*M, ...) is numerically singular.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The region does not enclose the spectrum it is used with.
class RegionError : public Error {
 public:
  using Error::Error;
};

/// The region is of a kind the operation does not handle (corners, non-convex, multi-component).
class UnsupportedRegionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kspec
