#pragma once

#include <stdexcept>
#include <string>

namespace pw {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an enumeration or search exceeds its configured budget.
struct bound_exceeded : error {
    bound_exceeded(const std::string& msg, std::size_t partial)
        : error(msg), partial_count(partial) {}
    std::size_t partial_count;
};

} // namespace pw
