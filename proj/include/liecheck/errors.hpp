#pragma once

#include <stdexcept>
#include <string>

namespace liecheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_p") {}
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Bad input to an operation: a hypothesis that the caller must guarantee is false.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configuration the library does not model (e.g. no faithful restricted
// representation available for the p-map).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its point budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Bad command line or scenario parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecheck
