#pragma once

#include <stdexcept>
#include <string>

namespace braidmono {

// Precondition or input-format violation. CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A product identity or expected-value check failed. CLI exit code 2.
struct OracleMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable length cap was exceeded during free-word rewriting. CLI exit code 3.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace braidmono
