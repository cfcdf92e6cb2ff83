#ifndef DILUTE_ERRORS_HPP
#define DILUTE_ERRORS_HPP

#include <stdexcept>

namespace dilute {

// Bad user-supplied parameters (CLI maps this to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree (recurrence vs closed form, exact division)
// disagreed.  Signals a transcription bug, never user error.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dilute

#endif
