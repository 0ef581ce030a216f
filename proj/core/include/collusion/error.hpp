#pragma once

#include <stdexcept>
#include <string>

namespace collusion {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data (files, records, configuration) could not be used.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by its arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Rows, models or trainsets were produced under different column layouts.
class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace collusion
