#pragma once

#include <stdexcept>
#include <string>

namespace lmode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different subspaces or have incompatible lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A truncated representation is too small to hold the requested state.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lmode
