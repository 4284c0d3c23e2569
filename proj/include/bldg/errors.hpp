#pragma once

#include <stdexcept>
#include <string>

namespace bldg {

// Invalid input, violated precondition, or exceeded desk-scale cap.
// The CLI maps these to exit code 2.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical consistency check failed on otherwise valid inputs
// (e.g. a map does not extend, a relation is violated). Exit code 1.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bldg
