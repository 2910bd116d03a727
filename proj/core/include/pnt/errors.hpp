#pragma once

#include <stdexcept>
#include <string>

namespace pnt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x = 0 for ln, r outside [0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid sequence index, e.g. nth_prime(0) or the predecessor of 2.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Input beyond every configured counting/checkpoint range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Work would exceed a configured resource bound (enumeration size, sieve capacity).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A bounded search finished without a result.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pnt
