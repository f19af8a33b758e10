#pragma once

#include <stdexcept>
#include <string>

namespace exprim {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad dimension, non-involution, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap or search budget was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace exprim
