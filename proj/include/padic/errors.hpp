#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// A word or tower level was requested beyond the configured materialization cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The renormalization denominator vanishes (edge words k=0 and k=n carry no structure).
struct DegenerateDenominator : std::domain_error {
    explicit DegenerateDenominator(const std::string& what) : std::domain_error(what) {}
};

// The point sits on a top rung at every level representable with its digits.
// Either the point is genuinely outside the domain of T, or more digits are needed.
struct UndefinedAtDepth : std::runtime_error {
    explicit UndefinedAtDepth(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace padic
