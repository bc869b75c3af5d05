#pragma once

#include <stdexcept>
#include <string>

namespace comer {

// Base type for everything this library throws on bad input or broken state.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};
class DoesNotDivideError : public Error {
 public:
  using Error::Error;
};
class NotPrimitiveRootError : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};
class OracleCapExceededError : public Error {
 public:
  using Error::Error;
};
class CapExceededError : public Error {
 public:
  using Error::Error;
};
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};
class NotCoprimeError : public Error {
 public:
  using Error::Error;
};
class GcdIsOneError : public Error {
 public:
  using Error::Error;
};
class NoRootFoundError : public Error {
 public:
  using Error::Error;
};
class UnknownAlgebraError : public Error {
 public:
  using Error::Error;
};
class IncompatibleColorCountError : public Error {
 public:
  using Error::Error;
};
class MalformedEmbeddingError : public Error {
 public:
  using Error::Error;
};
class CorruptCheckpointError : public Error {
 public:
  using Error::Error;
};
class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

// Thrown when an orbit mixes mandatory and forbidden triples. That cannot
// happen for a correctly built spectrum, so it signals an internal bug,
// not a recoverable condition.
class InconsistentOrbitError : public Error {
 public:
  using Error::Error;
};

}  // namespace comer
