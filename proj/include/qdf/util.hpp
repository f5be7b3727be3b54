#pragma once

#include <stdexcept>
#include <string>

namespace qdf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation exceeds its configured budget. Callers must
// propagate this as a distinguished status, never as a verdict.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace qdf
