#pragma once

#include <stdexcept>

namespace tk {

/// Thrown when a witness guaranteed by one of the verified statements fails
/// to exist on a concrete instance.  Suites catch these and record the
/// instance as a violation.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tk
