#pragma once

#include <stdexcept>
#include <string>

namespace mscff {

// Dimension disagreement between operands.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite value produced or encountered (overflow, NaN, divergence).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameter or configuration value.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mscff
