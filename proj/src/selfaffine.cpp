#include "padic/selfaffine.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace padic {

AffineMap2 alpha(Side side, const Rational& p) {
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("alpha: p must be in (0,1)");
    if (side == Side::Left) return {p, 0, 0, 1, p, 0};
    Rational q = 1 - p;
    return {q, 0, p, -1, q, 1};
}

std::pair<Rational, Rational> apply_alpha(Side side, const Rational& p, const Rational& x,
                                          const Rational& y) {
    return alpha(side, p).apply(x, y);
}

TriangularArray TriangularArray::from_side(std::vector<std::pair<Rational, Rational>> side) {
    if (side.empty()) throw std::invalid_argument("array needs at least one line");
    TriangularArray a;
    a.lines_.resize(side.size());
    for (std::size_t i = 0; i < side.size(); ++i) {
        a.lines_[i].resize(i + 1);
        a.lines_[i][0] = std::move(side[i]);
    }
    for (std::size_t i = 1; i < a.lines_.size(); ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            a.lines_[i][j].first = a.lines_[i - 1][j - 1].first - a.lines_[i][j - 1].first;
            a.lines_[i][j].second = a.lines_[i - 1][j - 1].second - a.lines_[i][j - 1].second;
        }
    return a;
}

bool TriangularArray::additive_ok() const {
    for (std::size_t i = 0; i + 1 < lines_.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            if (lines_[i][j].first != lines_[i + 1][j].first + lines_[i + 1][j + 1].first) return false;
            if (lines_[i][j].second != lines_[i + 1][j].second + lines_[i + 1][j + 1].second)
                return false;
        }
    return true;
}

CurveSamples TriangularArray::to_polyline() const {
    int m = depth();
    if (m > 28) throw std::invalid_argument("polyline depth too large to enumerate");
    CurveSamples c;
    c.ts.push_back(Rational(0));
    c.values.push_back(Rational(0));
    // In-order leaf walk: leaf b (binary word, left=0) sits in column popcount(b)
    // of the bottom line, so the polyline is a prefix-sum over leaf increments.
    const auto& bottom = lines_[static_cast<std::size_t>(m)];
    Rational t = 0, v = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        int j = std::popcount(b);
        if (sgn(bottom[static_cast<std::size_t>(j)].first) == 0) continue;  // degenerate leaf
        t += bottom[static_cast<std::size_t>(j)].first;
        v += bottom[static_cast<std::size_t>(j)].second;
        c.ts.push_back(t);
        c.values.push_back(v);
    }
    return c;
}

std::pair<TriangularArray, TriangularArray> TriangularArray::split() const {
    if (depth() < 1) throw std::invalid_argument("split needs at least two lines");
    TriangularArray left, right;
    left.lines_.resize(lines_.size() - 1);
    right.lines_.resize(lines_.size() - 1);
    for (std::size_t i = 0; i + 1 < lines_.size(); ++i) {
        left.lines_[i].assign(lines_[i + 1].begin(), lines_[i + 1].begin() + (i + 1));
        right.lines_[i].assign(lines_[i + 1].end() - (i + 1), lines_[i + 1].end());
    }
    return {std::move(left), std::move(right)};
}

TriangularArray canonical_array(const Rational& p, int m) {
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("canonical_array: p must be in (0,1)");
    if (m < 0) throw std::invalid_argument("canonical_array: m must be >= 0");
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    Rational xi = 1;  // p^i
    for (int i = 0; i <= m; ++i) {
        side[static_cast<std::size_t>(i)].first = xi;
        side[static_cast<std::size_t>(i)].second = i == 0 ? Rational(0) : i * (xi / p);
        xi *= p;
    }
    return TriangularArray::from_side(std::move(side));
}

TriangularArray transition_array(int m) {
    if (m < 0) throw std::invalid_argument("transition_array: m must be >= 0");
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Rational xi = make_rational(BigInt(1), BigInt(1) << i);
        // i(i-1) (1/2)^{i-2} = i(i-1) * 4 * 2^{-i}
        side[static_cast<std::size_t>(i)] = {xi, Rational(4 * i * (i - 1)) * xi};
    }
    return TriangularArray::from_side(std::move(side));
}

TriangularArray family_array(const Rational& p, int s, int m) {
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("family_array: p must be in (0,1)");
    if (s < 1 || m < 0) throw std::invalid_argument("family_array: need s >= 1, m >= 0");
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    Rational xi = 1;
    for (int i = 0; i <= m; ++i) {
        long falling = 1;  // i(i-1)...(i-s), s+1 factors
        for (int r = 0; r <= s; ++r) falling *= (i - r);
        Rational y = 0;
        if (falling != 0) {
            // i > s here, so p^{i-s-1} is a nonnegative power.
            Rational pw = 1;
            for (int r = 0; r < i - s - 1; ++r) pw *= p;
            y = Rational(falling) * pw;
        }
        side[static_cast<std::size_t>(i)] = {xi, y};
        xi *= p;
    }
    return TriangularArray::from_side(std::move(side));
}

TriangularArray renormalized_tail_array(const TriangularArray& a, int i0) {
    if (i0 < 0 || i0 > a.depth()) throw std::invalid_argument("tail start out of range");
    int m = a.depth() - i0;
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) side[static_cast<std::size_t>(i)] = {a.x(i + i0, 0), a.y(i + i0, 0)};
    // x rescaled to total 1, then the linear trend removed so the curve closes at 0.
    Rational x0 = side[0].first;
    Rational y0 = side[0].second;
    for (auto& [x, y] : side) {
        x /= x0;
        y -= x * y0;
    }
    TriangularArray tail = TriangularArray::from_side(side);
    Rational norm = tail.to_polyline().max_abs();
    if (sgn(norm) == 0) return tail;
    for (auto& [x, y] : side) y /= norm;
    return TriangularArray::from_side(std::move(side));
}

double eval_Mp(const Rational& p, const Rational& t, double eps) {
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("eval_Mp: p must be in (0,1)");
    if (sgn(t) < 0 || t > 1) throw std::domain_error("eval_Mp: t must be in [0,1]");
    if (eps <= 0) throw std::domain_error("eval_Mp: eps must be positive");
    Rational q = p > 1 - p ? p : 1 - p;
    // |M_p| <= 2/(1-q): the subdivision adds at most the segment's x-width per
    // level, giving a geometric tail bound.
    Rational bound = 2 / (1 - q);
    // Track M_p(t) = A * M_p(t') + B; stop when the unresolved part A*bound < eps.
    Rational A = 1, B = 0, cur = t;
    while (sgn(cur) > 0 && cur < 1) {
        if (A.get_d() * bound.get_d() < eps) break;
        if (cur <= p) {
            cur /= p;  // M(t) = p M(t/p) + t/p
            B += A * cur;
            A *= p;
        } else {
            cur = (cur - p) / (1 - p);  // M(t) = (1-p) M(t') - t' + 1
            B += A * (1 - cur);
            A *= (1 - p);
        }
    }
    return B.get_d();
}

bool compatible(const CurveSamples& samples, const TriangularArray& a, double tol) {
    CurveSamples poly = a.to_polyline();
    for (std::size_t i = 0; i < poly.ts.size(); ++i) {
        double d = std::fabs(Rational(samples.eval(poly.ts[i]) - poly.values[i]).get_d());
        if (d > tol) return false;
    }
    return true;
}

}  // namespace padic
