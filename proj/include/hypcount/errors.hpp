#pragma once

#include <stdexcept>
#include <string>

namespace hypcount {

// enumeration or table size would exceed the configured cap
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// a mathematical assertion failed (rounding contract, identity mismatch);
// distinct from invalid_argument so callers can map it to its own exit code
struct check_error : std::runtime_error {
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypcount
