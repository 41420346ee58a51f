#pragma once

#include <stdexcept>
#include <string>

namespace gi {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad script, ring mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation that is defined but not supported for this input
/// (e.g. regularity of a weighted grading).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gi
