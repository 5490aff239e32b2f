#pragma once

#include <stdexcept>

namespace steenq {

/// Raised when a computation reaches a state that a proven invariant rules out.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace steenq
