#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DegenerateSector : public Error {
 public:
  using Error::Error;
};

class InvalidSector : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class InvalidRho : public Error {
 public:
  using Error::Error;
};

class ZeroOperator : public Error {
 public:
  using Error::Error;
};

}  // namespace numrad
