#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copra {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated (bad element index,
/// empty domain, malformed relation, unknown family, ...).  CLI exit code 1.
struct input_error : error {
    using error::error;
};

/// The instance is beyond the configured desk-scale budget (search nodes,
/// size caps, product caps).  Never silently truncates.  CLI exit code 2.
struct capacity_error : error {
    using error::error;
};

/// Text input could not be parsed.  Carries a 0-based character position
/// into the offending string.  CLI exit code 3.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

} // namespace copra
