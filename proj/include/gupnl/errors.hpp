#pragma once

#include <stdexcept>
#include <string>

namespace gupnl {

// Invalid input values: nonpositive beta, non-finite momentum, zero
// coefficient vector, empty record stream.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative method failed to converge; carries the worst residual seen.
struct numeric_error : std::runtime_error {
    double residual;
    explicit numeric_error(const std::string& msg, double res = 0.0)
        : std::runtime_error(msg), residual(res) {}
};

// Evaluation would leave double range (complex plane waves grow exponentially).
struct range_error : std::range_error {
    using std::range_error::range_error;
};

// A value object no longer satisfies its construction-time invariants.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gupnl
