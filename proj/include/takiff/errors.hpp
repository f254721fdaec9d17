#pragma once

#include <stdexcept>
#include <string>

namespace takiff {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside an operation's domain
/// (unsupported Lie type, non-dominant weight, malformed input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace takiff
