#pragma once

#include <stdexcept>
#include <string>

namespace scholmig {

// Bad command-line usage or configuration. CLI maps this to exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string &msg) : std::runtime_error(msg) {}
};

// Unreadable, malformed, or contract-violating input data. Exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace scholmig
