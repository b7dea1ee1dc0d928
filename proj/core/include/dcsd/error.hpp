#pragma once

#include <stdexcept>
#include <string>

namespace dcsd {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes (2 usage, 3 data, 4 internal invariant).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or incompatible option combinations.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unreadable input, missing columns, unusable values.
class DataError : public Error {
 public:
  using Error::Error;
};

// The target has no spread where the chosen objective needs one
// (max(P) = med(P), or smd(P) = 0).
class DegenerateTargetError : public DataError {
 public:
  using DataError::DataError;
};

// A precondition or internal invariant was violated: a programming error.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcsd
