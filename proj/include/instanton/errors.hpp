#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coefficient was requested at an exponent the series does not know.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Leading coefficient is zero or not a unit of the coefficient ring.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition on its arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at t = 1 hit a genuine pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, int order) : Error(what), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

// A structural self-check of the surface/lattice data failed.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A computed quantity violated a property the mathematics guarantees.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Numeric evaluation could not reach the requested precision.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace instanton
