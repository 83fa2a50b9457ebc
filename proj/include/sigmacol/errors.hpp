#pragma once

#include <stdexcept>
#include <string>

namespace sigmacol {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file. Messages carry 1-based line numbers.
struct parse_error : error {
    using error::error;
};

/// An exact oracle was asked for an instance above its size cap.
/// Caps are runtime-configurable; exceeding one is an error, never a
/// silent approximation.
struct cap_exceeded : error {
    using error::error;
};

/// A documented precondition of an operation does not hold
/// (not-a-star-coloring, wrong-depth, list-exhausted, ...).
struct precondition_error : error {
    using error::error;
};

} // namespace sigmacol
