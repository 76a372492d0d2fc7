#pragma once

#include <stdexcept>
#include <string>

namespace invmean {

/// Argument outside the domain of a mean or mapping (e.g. non-positive input to a power mean).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Vector length does not match the declared arity.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed structural input: index vectors, interval bounds, spec files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. walk length of a non-ergodic graph).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request would exceed a hard resource limit.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace invmean
