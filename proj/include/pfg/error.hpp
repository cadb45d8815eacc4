#pragma once

#include <stdexcept>
#include <string>

namespace pfg {

// Base class for all library errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input or a broken structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A reduced rational result does not fit in 64 bits.
struct OverflowError : Error {
    using Error::Error;
};

// Subgroup enumeration (or similar) requested above the configured cap.
struct ResourceLimitError : Error {
    using Error::Error;
};

// An operation was called on input that fails its stated precondition,
// e.g. a normality predicate on a set that is not a PFSG.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace pfg
