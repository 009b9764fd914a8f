#pragma once

#include <stdexcept>
#include <string>

namespace webcalc {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class WeightMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroWeight : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class NotEndomorphism : public Error {
 public:
  using Error::Error;
};

class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

class AlphabetCollision : public Error {
 public:
  using Error::Error;
};

class IrreducibleToFinite : public Error {
 public:
  using Error::Error;
};

}  // namespace webcalc
