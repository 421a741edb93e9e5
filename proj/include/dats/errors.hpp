#pragma once
#include <stdexcept>

namespace dats {

// Validation failure: bad argument, corrupt history, out-of-range config value.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Filesystem failure; message carries the offending path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dats
