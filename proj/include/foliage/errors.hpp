#pragma once

#include <stdexcept>
#include <string>

namespace foliage {

// Bad user input: unparsable text, invalid forms, non-invariant curves.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent algorithms disagreed. Never expected.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ZeroPolynomialError : public InputError {
 public:
  ZeroPolynomialError() : InputError("operation undefined on the zero polynomial") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace foliage
