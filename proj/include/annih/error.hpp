#pragma once

#include <stdexcept>
#include <string>

namespace annih {

/// A caller-supplied argument violates a documented precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Kinematics are degenerate: vanishing p.k denominator, beta*sin(delta) >= 1, etc.
class degenerate_kinematics : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative scheme exhausted its budget; carries the best estimate reached.
class convergence_failure : public std::runtime_error {
public:
    convergence_failure(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_bound(err) {}

    double best_estimate;
    double error_bound;
};

/// An internal consistency assertion failed (e.g. a probability far outside [0,1]).
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace annih
