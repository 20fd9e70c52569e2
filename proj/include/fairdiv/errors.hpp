#pragma once

#include <stdexcept>

namespace fairdiv {

// Malformed input document (JSON instance/allocation/sequence, rational
// literal, generator config). Message names the offending field or cell.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard was exceeded (N^M, 2^M, variable-count limits).
// Guards fail loudly instead of silently truncating the search space.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fairdiv
