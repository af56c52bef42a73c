#pragma once

#include <stdexcept>

namespace mlucb {

/// Bad or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failures (CLI exit code 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data or a violated invariant (CLI exit code 4).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mlucb
