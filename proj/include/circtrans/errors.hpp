#pragma once

#include <stdexcept>
#include <string>

namespace circtrans {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, out-of-range indices, or a violated precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The string has no separator symbol (all zeros or all ones).
class DegeneratePartitionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

/// Two strings of different length or symbol multiset; distance is undefined.
class IncompatiblePairError : public Error {
 public:
  using Error::Error;
};

/// A constructive routine produced a sequence that failed its own replay check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace circtrans
