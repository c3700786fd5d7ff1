#pragma once

#include <stdexcept>
#include <string>

namespace flipforge {

/// Malformed or out-of-range input (bad ambient size, unknown arc, bad polygon).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. These indicate a modelling bug or a
/// falsified claim, never bad user input.
class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested instance exceeds the configured verification cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flipforge
