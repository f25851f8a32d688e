#pragma once

#include <stdexcept>
#include <string>

namespace repsets {

// Requested set would exceed the configured universe cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested scan or enumeration is larger than the built-in guard allows.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (set literals, cache lines).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace repsets
