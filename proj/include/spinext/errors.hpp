#pragma once

#include <stdexcept>
#include <string>

namespace spinext {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (zero vector, genus < 1, i == j, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Argument is well formed but the operation's precondition fails
/// (non-symplectic matrix, Arf mismatch, not a semidirect decomposition).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A state cap or search budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinext
