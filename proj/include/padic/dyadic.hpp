#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/exact.hpp"
#include "padic/towers.hpp"

namespace padic {

// A level-N0 step function on [0,1): one exact rational value per dyadic
// interval, indexed by the interval's digit word read as a binary number.
struct DyadicFunction {
    int level = 1;
    std::vector<Rational> values;  // size 2^level

    static DyadicFunction constant(int level, const Rational& c);

    // The classical g = 1_{[0,1/2)} - 1_{[1/2,1)}.
    static DyadicFunction ab_indicator();

    // The coboundary 1_{[1/4,1/2)} - 1_{[1/2,3/4)}.
    static DyadicFunction coboundary_example();

    // Value on the level-`level` interval with index `word`.
    const Rational& on_word(std::uint64_t word) const { return values.at(word); }

    // Value at a point (needs depth >= level digits).
    const Rational& at_point(const Point& x) const;

    // The same function viewed one dyadic level deeper (values duplicated).
    DyadicFunction lift() const;

    DyadicFunction operator+(const Rational& c) const;

    // JSON round-trip: {"level": N0, "values": ["1/2", "-1", ...]}.
    static DyadicFunction from_json(const std::string& text);
    static DyadicFunction load(const std::string& path);
    std::string to_json() const;
};

// Ergodic sums of g along the level-N0 towers: h_l = sum of g over the rungs
// of tau_{N0,l}, for l = 0..N0.
std::vector<Rational> tower_sums(const DyadicFunction& g);

// Partial sums of g along tau_{N0,l}: entry s is the sum over the first s rungs
// (s = 0..C(N0,l)). These are the base-case graphs F^g_{N0,l}.
std::vector<std::vector<Rational>> tower_prefix_sums(const DyadicFunction& g);

// h^g_{n,k} for n >= N0, via the occurrence counts of each base letter:
// h^g_{n,k} = sum_l h_l C(n-N0, k-l).
Rational tower_sum_nk(const std::vector<Rational>& h, int n0, std::uint64_t n, std::int64_t k);

// P^g(p) = sum_l h_l p^l (1-p)^{N0-l} (N0 p - l), exact in the monomial basis.
Polynomial polynomial_Pg(const DyadicFunction& g);

// The same polynomial computed as -cov_{mu_p}(g ; X_1+...+X_N0); must agree
// with polynomial_Pg coefficient by coefficient.
Polynomial covariance_Pg(const DyadicFunction& g);

struct CohomologyResult {
    Rational constant;
    DyadicFunction transfer;  // f with g = constant + f - f o T
};

// Succeeds iff the tower sums are proportional to C(N0,l); the transfer
// function is built rung-wise as f(rung r) = -sum_{i<r} (g - C)(rung i).
std::optional<CohomologyResult> cohomology_test(const DyadicFunction& g);

// The transition family g_{N0}(x) = (-1)^{digit sum}, realized constant per
// tower; its tower sums are (-1)^l C(N0,l).
DyadicFunction transition_family(int n0);

// S_{N0}(n,k) = h^{g_{N0}}_{n,k} / C(n,k), by the two-term recurrence with base
// S_1(n,k) = (n-2k)/n.
Rational S_ratio(int n0, std::uint64_t n, std::int64_t k);

// Numerator of the array entry y_{i,0} along the diagonal (2k,k) for g_{N0}:
// h^{g}_{2k-i,k-i} - (C(2k-i,k-i)/C(2k,k)) h^{g}_{2k,k}, exact.
Rational transition_numerator(int n0, std::uint64_t k, int i);

struct DecayProfile {
    std::vector<std::pair<int, double>> line_maxima;  // (i, max_j |y_{i,j}|)
    double fitted_ratio = 0.0;                        // geometric ratio over i in [5,25]
};

// Line-wise maxima of the g-array's y entries at (nbar,kbar), with a
// least-squares geometric fit. Refuses functions cohomologous to a constant
// (their renormalization degenerates).
DecayProfile gamma_decay_profile(const DyadicFunction& g, std::uint64_t nbar, std::int64_t kbar,
                                 int i_max = 25);

}  // namespace padic
