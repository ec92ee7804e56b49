#pragma once

#include <stdexcept>
#include <string>

namespace mrsk {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class NotSemistandardError : public Error {
public:
  using Error::Error;
};

class NotOrderedError : public Error {
public:
  using Error::Error;
};

class NotInImageError : public Error {
public:
  using Error::Error;
};

class NotNilpotentError : public Error {
public:
  using Error::Error;
};

class NotInvariantError : public Error {
public:
  using Error::Error;
};

class EmptyStratumError : public Error {
public:
  using Error::Error;
};

// Raised when data that the mathematics guarantees to be well-formed is not;
// always indicates a bug rather than bad input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace mrsk
