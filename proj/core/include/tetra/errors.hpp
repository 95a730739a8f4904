#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (log of a negative
/// number, a mass pair outside the quarter disk, a non-finite result, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid precision request, or a computation that ran out of digits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction-time consistency assertion failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tetra
