#pragma once

#include <stdexcept>
#include <string>

namespace weylac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unknown group tag or an entry missing from the group catalog.
class CatalogError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation
/// (rank mismatch, non-dominant weight, non-character exponent, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A numeric parameter violates a documented precondition.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An internal identity failed to hold. Always indicates a bug.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace weylac
