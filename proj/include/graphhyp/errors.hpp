#pragma once

#include <stdexcept>
#include <string>

namespace graphhyp {

/// Raised when contracting an edge set that contains a cycle of the graph.
class LoopContractionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine would exceed its hard size limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by counting entry points handed the zero polynomial.
class ZeroPolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace graphhyp
