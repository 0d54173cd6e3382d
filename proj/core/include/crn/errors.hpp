#pragma once

#include <stdexcept>
#include <string>

namespace crn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (.crn files, numbers, partitions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Nonpositive rate constants, logarithms of nonpositive values and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a weakly reversible reaction graph.
class NotWeaklyReversible : public Error {
 public:
  using Error::Error;
};

/// The rate constants do not admit a positive node balanced steady state.
class NotBalanced : public Error {
 public:
  using Error::Error;
};

/// Too many admissible partitions to enumerate under the configured cap.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed (step-size underflow, Newton non-convergence).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace crn
