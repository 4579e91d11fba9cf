#pragma once

#include <stdexcept>

namespace ucc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition: bad spec string, element out
// of range, empty R where a nonempty one is required, operands from
// different universes.
struct UsageError : Error {
    using Error::Error;
};

// A resource guard tripped: group order above the configured ceiling,
// enumeration guard, family size cap.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace ucc
