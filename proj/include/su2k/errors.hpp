#pragma once

#include <stdexcept>
#include <string>

namespace su2k {

/// Input outside the mathematical domain of an operation (bad label, inadmissible triple, k too small).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A model axiom or internal consistency check failed. Indicates a bug, never bad input.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite floating value or division by zero in approximate arithmetic.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace su2k
