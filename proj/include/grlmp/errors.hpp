#pragma once

#include <stdexcept>
#include <string>

namespace grlmp {

/// An argument lies outside the set on which an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A combined value would leave the interval on which the operation lives.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Data carry no information about the parameter being estimated.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical integration did not reach its requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distribution spec or data file does not match its schema.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace grlmp
