#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request beyond what an implementation is certified for (order, size, range).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Query outside a tabulated or guarded range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-convergence, singular factorization.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An ODE trajectory left the branch it was meant to follow.
class InstabilityError : public NumericalError {
 public:
  InstabilityError(const std::string& what, double x) : NumericalError(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// A solver's self-check (residual, branch selection) failed.
class SolverError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Malformed caller input (duplicate cards, bad edge list).
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line) : InputError(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class UnfoldingError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmt
