#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "padic/exact.hpp"

namespace padic {

// A point of [0,1) as a finite dyadic interval [sum d_i 2^{-i}, +2^{-depth}).
// Binary expansions are the terminating ones; the half-open convention keeps
// the coding unambiguous.
struct Point {
    std::vector<bool> digits;

    int depth() const { return static_cast<int>(digits.size()); }
    Rational value() const;

    // Parses "0.0110" (or just "0110").
    static Point from_string(const std::string& s);
    std::string to_string() const;

    // Interval index at level n <= depth: the first n digits as an integer.
    std::uint64_t interval_index(int n) const;
};

// One Rokhlin tower: C(n,k) dyadic intervals of width 2^{-n}, listed base to top.
struct Tower {
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::vector<std::uint64_t> rungs;  // interval indices j, rung r = [j 2^{-n}, (j+1) 2^{-n})
};

// The full cutting-and-stacking hierarchy, built lazily level by level up to a cap.
class TowerSystem {
  public:
    explicit TowerSystem(int level_cap = 22);

    int level_cap() const { return cap_; }

    // The n+1 towers of level n (heights C(n,0)..C(n,n)); throws CapExceeded beyond cap.
    const std::vector<Tower>& level(int n) const;

    // (tower index k, rung r) of the width-2^{-n} interval j, from the explicit
    // rung lists. This is the normative definition used by apply_T.
    std::pair<int, std::uint64_t> locate(int n, std::uint64_t j) const;

    // One step of the transformation: finds the smallest level at which x is not
    // on a top rung and translates x to the next rung of that tower. Throws
    // UndefinedAtDepth when x is on top at every level up to its depth (or cap).
    Point apply_T(const Point& x) const;

  private:
    void ensure(int n) const;
    int cap_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Tower>> levels_;                          // [n-1]
    mutable std::vector<std::vector<std::pair<int, std::uint64_t>>> locate_;  // [n-1][j]
};

// Process-wide tower system with the default cap, shared by the modules that
// only need small levels (base-letter sums, transfer functions, orbits).
const TowerSystem& shared_towers();

// Sum of the first n digits; equals the index of the level-n tower containing x.
int k_n(const Point& x, int n);

// Height of x in its level-n tower, by the digit recursion (no tower lists needed,
// so this works at depths far beyond the materialization cap).
BigInt rung_index(const Point& x, int n);

// i.i.d. digits with P(1) = p.
Point sample_mu_p(const Rational& p, int depth, std::mt19937_64& rng);

// mu_p of the dyadic interval given by the digits: prod p^{d_i} (1-p)^{1-d_i}, exact.
Rational mu_p_interval(const Rational& p, const std::vector<bool>& digits);

// Smallest n <= n_max with rung_index(x,n) < floor(C(n, k_n(x)) / s): x lies in
// the bottom s-th of its tower. Integer-floor semantics, so height-1 towers
// qualify only at s = 1.
std::optional<int> find_subsequence(const Point& x, int s, int n_max);

}  // namespace padic
