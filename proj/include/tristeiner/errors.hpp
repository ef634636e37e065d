#pragma once

#include <stdexcept>
#include <string>

namespace tristeiner {

/// Zero-length rays, coincident or collinear terminals.
class DegenerateGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter fell outside the bracket an operation is defined on.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A bracketing or fixed-point solve did not meet its tolerance.
class RootFindingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tristeiner
