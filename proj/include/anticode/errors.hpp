#pragma once

#include <stdexcept>
#include <string>

namespace anticode {

/// Parameters violate a constructor or operation precondition.
struct invalid_params : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two words or sets with different (n, q) were combined.
struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined on the given input (e.g. diameter of an empty set).
struct undefined_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured budget (enumeration size, pair comparisons, search nodes)
/// would be exceeded. Carries the estimated cost that tripped the guard.
struct resource_limit : std::runtime_error {
    resource_limit(const std::string& what, std::string estimate_)
        : std::runtime_error(what + " (estimated " + estimate_ + ")"),
          estimate(std::move(estimate_)) {}
    std::string estimate;
};

}  // namespace anticode
