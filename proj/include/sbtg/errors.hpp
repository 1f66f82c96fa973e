#pragma once

#include <stdexcept>
#include <string>

namespace sbtg {

// Base for all library errors so callers can catch the whole family at once.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands with incompatible carriers/parameter lists, or indices out of range.
struct shape_error : error {
  using error::error;
};

// A requested computation exceeds an explicit scale cap.
struct cap_error : error {
  using error::error;
};

// Unknown or duplicate label in user-supplied data.
struct label_error : error {
  using error::error;
};

// Malformed instance file.
struct parse_error : error {
  using error::error;
};

// An internal cross-check that is supposed to hold for every valid input
// failed. Carries enough of the offending instance to reproduce.
struct theorem_violation : error {
  using error::error;
};

}  // namespace sbtg
