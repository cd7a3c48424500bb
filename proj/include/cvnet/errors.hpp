#pragma once

#include <stdexcept>
#include <string>

namespace cvnet {

// Base class for every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State construction violates a^2 - |b|^2 >= 1/4.
struct UncertaintyViolation : Error {
  using Error::Error;
};

// A quantity that must be positive is not.
struct NonPositive : Error {
  using Error::Error;
};

// Matrix dimensions are odd, inconsistent, or a bipartition is improper.
struct ShapeMismatch : Error {
  using Error::Error;
};

// A mode label does not exist in the covariance matrix or network.
struct UnknownLabel : Error {
  using Error::Error;
};

// partial_trace called with an empty keep set.
struct EmptyKeepSet : Error {
  using Error::Error;
};

// Determinants, eigenvalue pairing, or other numerics went out of spec.
struct NumericalFailure : Error {
  using Error::Error;
};

// A parameter is outside its documented range.
struct InvalidParameter : Error {
  using Error::Error;
};

// A mode (or splitter) name is declared twice, or a splitter couples a mode
// with itself.
struct DuplicateMode : Error {
  using Error::Error;
};

// A $variable has no binding at run time, or a binding names no placeholder.
struct UnboundVariable : Error {
  using Error::Error;
};

struct NonPositiveSteps : Error {
  using Error::Error;
};

struct IOFailure : Error {
  using Error::Error;
};

// Netfile diagnostics carry the 1-based source position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& message, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

}  // namespace cvnet
