#pragma once

#include <stdexcept>
#include <string>

namespace gaussdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element or vector does not match the shape of its group or matrix.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Caller supplied values that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Enumeration or search requested over an infinite group.
class NotEnumerable : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussdeg
