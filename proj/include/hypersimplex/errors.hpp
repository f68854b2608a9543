#pragma once

#include <stdexcept>

namespace hypersimplex {

// Invalid parameters, malformed vertices, or mismatched operands.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is only defined for 1 <= k <= d/2; the message names the
// complement isomorphism as the remedy.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result does not fit the result type. Never wraps silently.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Instance exceeds a size cap (enumeration, matrix, search).
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random-walk pathology: the rejection loop hit its draw cap.
class SamplerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypersimplex
