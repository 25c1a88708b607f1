#pragma once

#include <stdexcept>
#include <string>

namespace contact2d {

// Bad user-supplied configuration (unknown key, unparsable value, value out of range).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (k >= kappa, |u| >= c, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iteration failed to converge, bracketing failed, pole hit, tolerance unreachable.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace contact2d
