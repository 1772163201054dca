#include "padic/curves.hpp"

#include <cmath>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

namespace {

void check_block(const BlockId& id) {
    if (!id.valid()) throw std::invalid_argument("invalid BlockId");
}

// Everything eval_Fg needs about g, computed once per call chain.
struct GCtx {
    int n0;
    std::vector<Rational> h;                     // tower sums at level N0
    std::vector<std::vector<Rational>> prefix;   // partial sums along each tau_{N0,l}
};

GCtx make_ctx(const DyadicFunction& g) { return {g.level, tower_sums(g), tower_prefix_sums(g)}; }

Rational hg(const GCtx& c, std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    return tower_sum_nk(c.h, c.n0, n, k);
}

Rational eval_Fg_ctx(const GCtx& c, std::uint64_t n, std::int64_t k, BigInt l) {
    Rational acc = 0;
    while (n > static_cast<std::uint64_t>(c.n0)) {
        BigInt left = binomial(n - 1, k - 1);
        if (k > 0 && l <= left) {
            --n;
            --k;
        } else {
            // Skip over the complete bottom part (the tau_{n-1,k-1} sub-column).
            acc += hg(c, n - 1, k - 1);
            l -= left;
            --n;
        }
    }
    acc += c.prefix[static_cast<std::size_t>(k)][l.get_ui()];
    return acc;
}

Rational interpolate_Fg(const GCtx& c, const BlockId& id, const Rational& t) {
    Rational s = t * Rational(binomial(id.n, id.k));
    BigInt j = rational_floor(s);
    Rational f0 = eval_Fg_ctx(c, id.n, id.k, j);
    if (s == Rational(j)) return f0;
    Rational f1 = eval_Fg_ctx(c, id.n, id.k, j + 1);
    return f0 + (s - Rational(j)) * (f1 - f0);
}

std::pair<Rational, Rational> detrended_minmax(const GCtx& c, const BlockId& id,
                                               const Rational& slope) {
    const std::uint64_t n = id.n;
    const std::int64_t k = id.k;
    const std::uint64_t n0 = static_cast<std::uint64_t>(c.n0);

    // Detrended max/min per sub-tower, intrinsic to (m,l):
    //   Max(m,l) = max_j ( F^g_{m,l}(j) - slope * j ).
    // The bottom part of tau_{m,l} is a copy of tau_{m-1,l-1} and the top part
    // starts h^g_{m-1,l-1} - slope*C(m-1,l-1) higher, so
    //   Max(m,l) = max( Max(m-1,l-1), Delta + Max(m-1,l) ).
    // One sweep over the Pascal strip between (N0,*) and (n,k) therefore covers
    // every one of the C(n,k) breakpoints exactly.
    auto lo = [&](std::uint64_t m) -> std::int64_t {
        std::int64_t v = k - static_cast<std::int64_t>(n - m);
        return v > 0 ? v : 0;
    };
    auto hi = [&](std::uint64_t m) -> std::int64_t {
        return std::min<std::int64_t>(static_cast<std::int64_t>(m), k);
    };

    std::vector<Rational> maxv, minv, hrow, brow;  // indexed by l - lo(m)
    for (std::int64_t l = lo(n0); l <= hi(n0); ++l) {
        const auto& pre = c.prefix[static_cast<std::size_t>(l)];
        Rational mx = 0, mn = 0, d;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            d = pre[i] - slope * static_cast<long>(i);
            if (d > mx) mx = d;
            if (d < mn) mn = d;
        }
        maxv.push_back(mx);
        minv.push_back(mn);
        hrow.push_back(c.h[static_cast<std::size_t>(l)]);
        brow.push_back(Rational(binomial(n0, l)));
    }

    for (std::uint64_t m = n0 + 1; m <= n; ++m) {
        std::int64_t plo = lo(m - 1), phi_l = hi(m - 1);
        auto prev = [&](const std::vector<Rational>& row, std::int64_t l, bool* ok = nullptr) {
            if (l < plo || l > phi_l) {
                if (ok) *ok = false;
                return Rational(0);
            }
            if (ok) *ok = true;
            return row[static_cast<std::size_t>(l - plo)];
        };
        std::vector<Rational> nmax, nmin, nh, nb;
        for (std::int64_t l = lo(m); l <= hi(m); ++l) {
            Rational hb = prev(hrow, l - 1);   // h^g of the bottom sub-tower
            Rational bb = prev(brow, l - 1);   // its height C(m-1,l-1)
            nh.push_back(hb + prev(hrow, l));
            nb.push_back(bb + prev(brow, l));
            bool has_bottom = l >= 1;
            bool has_top = l <= static_cast<std::int64_t>(m) - 1;
            Rational delta = hb - slope * bb;
            Rational mx, mn;
            if (has_bottom) {
                mx = prev(maxv, l - 1);
                mn = prev(minv, l - 1);
                if (has_top) {
                    Rational tm = delta + prev(maxv, l);
                    if (tm > mx) mx = tm;
                    tm = delta + prev(minv, l);
                    if (tm < mn) mn = tm;
                }
            } else {
                mx = delta + prev(maxv, l);
                mn = delta + prev(minv, l);
            }
            nmax.push_back(mx);
            nmin.push_back(mn);
        }
        maxv = std::move(nmax);
        minv = std::move(nmin);
        hrow = std::move(nh);
        brow = std::move(nb);
    }
    return {minv[0], maxv[0]};
}

Rational renorm_value(const GCtx& c, const BlockId& id) {
    Rational slope = hg(c, id.n, id.k) / Rational(binomial(id.n, id.k));
    auto [mn, mx] = detrended_minmax(c, id, slope);
    Rational r = mx > -mn ? mx : -mn;
    return sgn(r) == 0 ? Rational(1) : r;
}

}  // namespace

BigInt eval_F(const BlockId& id, const BigInt& l) {
    check_block(id);
    return 2 * count_a_prefix(id, l) - l;
}

Rational eval_F_at(const BlockId& id, const Rational& t) {
    check_block(id);
    if (t < 0 || t > 1) throw std::out_of_range("eval_F_at: t outside [0,1]");
    Rational s = t * Rational(binomial(id.n, id.k));
    BigInt j = rational_floor(s);
    Rational f0(eval_F(id, j));
    if (s == Rational(j)) return f0;
    Rational f1(eval_F(id, j + 1));
    return f0 + (s - Rational(j)) * (f1 - f0);
}

Rational phi(const BlockId& id, const Rational& t) {
    check_block(id);
    if (id.n < 2 || id.k == 0 || static_cast<std::uint64_t>(id.k) == id.n)
        throw DegenerateDenominator("phi needs 0 < k < n, n >= 2");
    Rational x1 = make_rational(binomial(id.n - 1, id.k - 1), binomial(id.n, id.k));
    Rational hn(block_height(id.n, id.k));
    Rational den = Rational(block_height(id.n - 1, id.k - 1)) - x1 * hn;
    if (sgn(den) == 0) throw DegenerateDenominator("phi: vanishing denominator");
    return (eval_F_at(id, t) - t * hn) / den;
}

Rational eval_Fg(const DyadicFunction& g, const BlockId& id, const BigInt& l) {
    check_block(id);
    if (id.n < static_cast<std::uint64_t>(g.level))
        throw std::invalid_argument("eval_Fg: need n >= level(g)");
    if (l < 0 || l > binomial(id.n, id.k)) throw std::out_of_range("eval_Fg: l out of range");
    GCtx c = make_ctx(g);
    return eval_Fg_ctx(c, id.n, id.k, l);
}

Rational eval_Fg_at(const DyadicFunction& g, const BlockId& id, const Rational& t) {
    check_block(id);
    if (id.n < static_cast<std::uint64_t>(g.level))
        throw std::invalid_argument("eval_Fg_at: need n >= level(g)");
    if (t < 0 || t > 1) throw std::out_of_range("eval_Fg_at: t outside [0,1]");
    GCtx c = make_ctx(g);
    return interpolate_Fg(c, id, t);
}

std::pair<Rational, Rational> minmax_Fg(const DyadicFunction& g, const BlockId& id) {
    check_block(id);
    if (id.n < static_cast<std::uint64_t>(g.level))
        throw std::invalid_argument("minmax_Fg: need n >= level(g)");
    GCtx c = make_ctx(g);
    return detrended_minmax(c, id, Rational(0));
}

RenormConstant renorm_Rg(const DyadicFunction& g, const BlockId& id, std::uint64_t) {
    check_block(id);
    if (id.n < static_cast<std::uint64_t>(g.level))
        throw std::invalid_argument("renorm_Rg: need n >= level(g)");
    GCtx c = make_ctx(g);
    return {renorm_value(c, id), RenormMode::ExactScan, Rational(0)};
}

Rational phi_g(const DyadicFunction& g, const BlockId& id, const Rational& t) {
    check_block(id);
    if (id.n < static_cast<std::uint64_t>(g.level))
        throw std::invalid_argument("phi_g: need n >= level(g)");
    if (t < 0 || t > 1) throw std::out_of_range("phi_g: t outside [0,1]");
    GCtx c = make_ctx(g);
    Rational r = renorm_value(c, id);
    Rational hn = hg(c, id.n, id.k);
    return (interpolate_Fg(c, id, t) - t * hn) / r;
}

TriangularArray block_array(const BlockId& id, int m) {
    check_block(id);
    if (id.k == 0 || static_cast<std::uint64_t>(id.k) == id.n)
        throw DegenerateDenominator("block_array needs 0 < k < n");
    if (m < 0 || static_cast<std::uint64_t>(m) >= id.n)
        throw std::invalid_argument("block_array: need 0 <= m < n");
    BigInt cnk = binomial(id.n, id.k);
    Rational hn(block_height(id.n, id.k));
    Rational x1 = make_rational(binomial(id.n - 1, id.k - 1), cnk);
    Rational den = Rational(block_height(id.n - 1, id.k - 1)) - x1 * hn;
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Rational x = make_rational(binomial(id.n - i, id.k - i), cnk);
        Rational y = (Rational(block_height(id.n - i, id.k - i)) - x * hn) / den;
        side[static_cast<std::size_t>(i)] = {std::move(x), std::move(y)};
    }
    return TriangularArray::from_side(std::move(side));
}

TriangularArray g_array(const DyadicFunction& g, const BlockId& id, int m) {
    check_block(id);
    if (m < 0 || static_cast<std::uint64_t>(m + g.level) > id.n)
        throw std::invalid_argument("g_array: need 0 <= m <= n - level(g)");
    GCtx c = make_ctx(g);
    Rational r = renorm_value(c, id);
    BigInt cnk = binomial(id.n, id.k);
    Rational hn = hg(c, id.n, id.k);
    std::vector<std::pair<Rational, Rational>> side(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Rational x = make_rational(binomial(id.n - i, id.k - i), cnk);
        Rational y = (hg(c, id.n - i, id.k - i) - x * hn) / r;
        side[static_cast<std::size_t>(i)] = {std::move(x), std::move(y)};
    }
    return TriangularArray::from_side(std::move(side));
}

CurveSamples orbit_curve(const DyadicFunction& g, const Point& x, int l) {
    if (l < 1) throw std::invalid_argument("orbit_curve: need l >= 1");
    std::vector<Rational> f(static_cast<std::size_t>(l) + 1);
    Point cur = x;
    for (int j = 1; j <= l; ++j) {
        f[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(j - 1)] + g.at_point(cur);
        if (j < l) cur = shared_towers().apply_T(cur);
    }
    Rational r = 0;
    for (int j = 0; j <= l; ++j) {
        Rational d = abs(f[static_cast<std::size_t>(j)] - make_rational(j, l) * f.back());
        if (d > r) r = d;
    }
    if (sgn(r) == 0) r = 1;
    CurveSamples out;
    for (int j = 0; j <= l; ++j) {
        out.ts.push_back(make_rational(j, l));
        out.values.push_back((f[static_cast<std::size_t>(j)] - out.ts.back() * f.back()) / r);
    }
    return out;
}

double phi_Mp_distance(const BlockId& id, const Rational& p, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("phi_Mp_distance: need >= 2 grid points");
    double best = 0;
    for (int i = 0; i <= grid_points; ++i) {
        Rational t = make_rational(i, grid_points);
        double d = std::fabs(to_double(phi(id, t)) - eval_Mp(p, t, 1e-9));
        if (d > best) best = d;
    }
    return best;
}

DecayProfile gamma_decay_profile(const DyadicFunction& g, std::uint64_t nbar, std::int64_t kbar,
                                 int i_max) {
    if (cohomology_test(g))
        throw std::domain_error("gamma_decay_profile: g is cohomologous to a constant");
    TriangularArray a = g_array(g, {nbar, kbar}, i_max);
    DecayProfile prof;
    for (int i = 0; i <= i_max; ++i) {
        double mx = 0;
        for (int j = 0; j <= i; ++j) mx = std::max(mx, std::fabs(to_double(a.y(i, j))));
        prof.line_maxima.emplace_back(i, mx);
    }
    // Least-squares geometric fit of the maxima over lines [5, min(25, i_max)].
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int i = 5; i <= std::min(25, i_max); ++i) {
        double m = prof.line_maxima[static_cast<std::size_t>(i)].second;
        if (m <= 0) continue;
        double y = std::log(m);
        sx += i;
        sy += y;
        sxx += double(i) * i;
        sxy += i * y;
        ++cnt;
    }
    if (cnt >= 2) prof.fitted_ratio = std::exp((cnt * sxy - sx * sy) / (cnt * sxx - sx * sx));
    return prof;
}

}  // namespace padic
