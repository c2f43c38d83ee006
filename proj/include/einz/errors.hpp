#pragma once

#include <stdexcept>
#include <string>

namespace einz {

/// Malformed input: unparseable JSON, unknown policy literal, bad flag value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input describing an impossible or terminal game state.
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An arithmetic invariant (normalization, range) was violated.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace einz
