#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lplab {

inline constexpr const char* kVersion = "1.0.0";

// Bad arguments or malformed input documents. Messages name the offending
// field or index so CLI callers can report exactly what to fix.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// Raised when a numeric routine declines to answer rather than guess, e.g. a
// contour passing too close to a zero for the winding count to be trusted, or
// a bisection bracket that never straddles a sign change.
class NumericRefusal : public std::runtime_error {
public:
    explicit NumericRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

inline double rel_diff(double x, double y) {
    double scale = std::abs(x) > std::abs(y) ? std::abs(x) : std::abs(y);
    if (scale == 0.0) return 0.0;
    return std::abs(x - y) / scale;
}

} // namespace lplab
