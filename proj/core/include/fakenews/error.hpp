#pragma once

#include <stdexcept>
#include <string>

namespace fakenews {

// Bad input data: malformed files, unmapped labels, inconsistent models.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an argument contract (bad hyperparameter, bad fraction, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fakenews
