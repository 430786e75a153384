#pragma once

#include <stdexcept>

namespace wlpa {

// Bad user input (malformed file, precondition violation on a public entry point).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal assertion; reaching one of these is a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wlpa
