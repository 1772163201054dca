#pragma once

#include <vector>

#include "padic/exact.hpp"

namespace padic {

// A piecewise-linear curve given by exact breakpoints: ts strictly increasing,
// first t = 0, last t = end of the supporting interval (1 after renormalization).
struct CurveSamples {
    std::vector<Rational> ts;
    std::vector<Rational> values;

    std::size_t size() const { return ts.size(); }

    // Linear interpolation between breakpoints; t must lie in [ts.front(), ts.back()].
    Rational eval(const Rational& t) const;

    // sup |this - other| over the union of both breakpoint sets.
    Rational sup_distance(const CurveSamples& other) const;

    // max |value| over breakpoints (equals the sup norm of the polyline).
    Rational max_abs() const;
};

}  // namespace padic
