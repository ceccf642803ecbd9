#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sml {

// scientific-notation formatting for residuals in error messages
inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invalid parameters, sizes, or windows
struct ConfigError : Error {
  using Error::Error;
};

// out-of-range site or mode index
struct IndexError : Error {
  using Error::Error;
};

// vanishing denominator in a weight or algebraic-function evaluation
struct PoleError : Error {
  using Error::Error;
};

// a family handed to a joint diagonalizer does not commute
struct CommutationError : Error {
  using Error::Error;
};

// argument outside the mathematical domain (|k'| > 1, Im tau <= 0, bad label)
struct DomainError : Error {
  using Error::Error;
};

// a numerical extraction or consistency check could not be completed
struct EvaluationError : Error {
  using Error::Error;
};

}  // namespace sml
