#pragma once

#include <stdexcept>
#include <string>

namespace specenv {

/// Invalid configuration or input data (bad flags, malformed files,
/// violated preconditions). CLI exit code 1.
class config_error : public std::invalid_argument {
public:
  explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numerical failure at run time (poles hit, singular operators,
/// eigensolver breakdown, insufficient decay). CLI exit code 2.
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace specenv
