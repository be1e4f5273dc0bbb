// errors.hpp — Exception taxonomy mirrored by the CLI exit codes

#pragma once

#include <stdexcept>
#include <string>

namespace qcr {

// Bad scenario configuration or invalid user input (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: truncation deficits, eigensolver breakdown,
// invalid density matrices, divergent estimates (CLI exit code 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures on read/write (CLI exit code 4).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcr
