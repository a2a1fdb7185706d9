#pragma once

#include <stdexcept>
#include <string>

namespace ycl {

// Caller supplied malformed arguments (mismatched orders, bad legs, bad shapes).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Leading coefficient of a series is not invertible.
struct SingularSeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

// A result would depend on coefficients outside the tracked window.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity guaranteed by construction failed; indicates a bug.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ycl
