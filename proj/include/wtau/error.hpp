#pragma once

#include <stdexcept>
#include <string>

namespace wtau {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An operator needed a variable q_k beyond the polynomial's cutoff K.
class CutoffError : public Error {
 public:
  CutoffError(int variable, int cutoff);
  int variable() const { return variable_; }
  int cutoff() const { return cutoff_; }

 private:
  int variable_;
  int cutoff_;
};

/// Input outside the operation's domain (operator not in D-, bad model/engine pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A convention could not be fixed (fermion calibration, Hirota self-check).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that must hold by construction did not.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wtau
