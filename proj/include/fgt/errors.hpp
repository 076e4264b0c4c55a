#pragma once

#include <stdexcept>
#include <string>

namespace fgt {

/// Root of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, non-bijective permutations, field
/// constraints, invalid actions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands that belong to different structures (fields, degrees, algebras).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A configured size bound would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// No usable parameter (e.g. a lifting prime) exists below a configured bound.
class ConfigurationError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// An internal consistency check failed. Always a bug.
class DefectError : public Error {
 public:
  using Error::Error;
};

}  // namespace fgt
