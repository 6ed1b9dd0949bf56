#pragma once

#include <stdexcept>
#include <string>

namespace hnp {

// Malformed textual input: cycle strings, generator files, report JSON.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group enumeration would exceed the configured order cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold: element outside the group,
// mismatched parents, ill-defined homomorphism, missing assertion flag.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hnp
