#include "padic/curve_samples.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic {

Rational CurveSamples::eval(const Rational& t) const {
    if (ts.empty()) throw std::logic_error("empty curve");
    if (t < ts.front() || t > ts.back()) throw std::out_of_range("curve eval outside domain");
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts.begin());
    if (i < ts.size() && ts[i] == t) return values[i];
    // t lies strictly inside segment [ts[i-1], ts[i]].
    const Rational& t0 = ts[i - 1];
    const Rational& t1 = ts[i];
    return values[i - 1] + (t - t0) / (t1 - t0) * (values[i] - values[i - 1]);
}

Rational CurveSamples::sup_distance(const CurveSamples& other) const {
    // Both curves are piecewise linear, so the sup of their difference is
    // attained at a breakpoint of one of them.
    Rational best = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational d = abs(values[i] - other.eval(ts[i]));
        if (d > best) best = d;
    }
    for (std::size_t i = 0; i < other.ts.size(); ++i) {
        Rational d = abs(other.values[i] - eval(other.ts[i]));
        if (d > best) best = d;
    }
    return best;
}

Rational CurveSamples::max_abs() const {
    Rational best = 0;
    for (const auto& v : values) {
        Rational a = abs(v);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace padic
