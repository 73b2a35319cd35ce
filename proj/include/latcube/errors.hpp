#pragma once

#include <stdexcept>
#include <string>

namespace latcube {

// Integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A prime (or integer) has no representation in the requested form.
class NotRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact division that was required to be integral was not.
class NonIntegralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity failed; indicates a bug rather than bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace latcube
