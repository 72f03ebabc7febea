#pragma once

#include <stdexcept>
#include <string>

namespace orthorep {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (index out of range, shape mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (graph6, edge list, DIMACS, matrix files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard (monomial count, indexing count, search states) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A randomized construction kept hitting a measure-zero degeneracy after all allowed retries.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthorep
