#pragma once

#include <stdexcept>

namespace lmg {

// Rejected inputs: bad couplings, out-of-range subspace indices, malformed
// run configurations. Maps to CLI exit code 2.
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A would-be density matrix that is not one (negative weight, broken trace).
struct invalid_state : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation called on the wrong bath phase.
struct dispatch_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A mid-run check failed (non-finite output, lost positivity). Maps to CLI
// exit code 3.
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lmg
