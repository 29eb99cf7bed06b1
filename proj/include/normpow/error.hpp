#pragma once

#include <stdexcept>
#include <string>

namespace normpow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NonUnitDirection : public Error {
 public:
  using Error::Error;
};

/// D^p f_q(0) requested with p >= q.
class UndefinedAtOrigin : public Error {
 public:
  using Error::Error;
};

class ArgumentCountMismatch : public Error {
 public:
  using Error::Error;
};

class StencilHitsOrigin : public Error {
 public:
  using Error::Error;
};

/// The 2-D Hölder grid beat the tau2 = 1 reduction. Always an implementation bug.
class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace normpow
