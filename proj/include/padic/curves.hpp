#pragma once

#include <cstdint>

#include "padic/blocks.hpp"
#include "padic/curve_samples.hpp"
#include "padic/dyadic.hpp"
#include "padic/exact.hpp"
#include "padic/selfaffine.hpp"
#include "padic/towers.hpp"

namespace padic {

// Vertical normalization constant R^g_{n,k} = max_t |F^g(tC) - t F^g(C)|,
// or 1 when that max is exactly 0.
enum class RenormMode { ExactScan, ArrayApprox };

struct RenormConstant {
    Rational value;
    RenormMode mode = RenormMode::ExactScan;
    Rational error_bound = 0;  // 0 in exact mode
};

// F_{n,k}(l) = (#a - #b) among the first l letters of B_{n,k}.
BigInt eval_F(const BlockId& id, const BigInt& l);

// F_{n,k} at the abscissa t*C(n,k), linearly interpolated, 0 <= t <= 1.
Rational eval_F_at(const BlockId& id, const Rational& t);

// The renormalized curve: (F(tC) - t h_{n,k}) / (h_{n-1,k-1} - (C(n-1,k-1)/C) h_{n,k}).
// Throws DegenerateDenominator for the edge words k = 0, k = n.
Rational phi(const BlockId& id, const Rational& t);

// Ergodic sum of g over the first l rungs of tau_{n,k}; n >= level(g),
// 0 <= l <= C(n,k). O(n) descent through sub-towers plus a base prefix sum.
Rational eval_Fg(const DyadicFunction& g, const BlockId& id, const BigInt& l);
Rational eval_Fg_at(const DyadicFunction& g, const BlockId& id, const Rational& t);

// Exact (min, max) of F^g_{n,k} over all C(n,k)+1 integer breakpoints, via the
// same sub-tower sweep as renorm_Rg with a zero trend.
std::pair<Rational, Rational> minmax_Fg(const DyadicFunction& g, const BlockId& id);

// Exact R^g via a max/min recursion over the sub-tower decomposition: the max
// of F^g(j) - (j/C) F^g(C) over a sub-block is its entry value plus the
// sub-block's own detrended max, so one O(n^2) sweep covers every one of the
// C(n,k) breakpoints. The cap/approx mode is kept for interface stability but
// the exact sweep is always feasible in practice.
RenormConstant renorm_Rg(const DyadicFunction& g, const BlockId& id,
                         std::uint64_t cap = std::uint64_t{1} << 24);

// phi^g = (F^g(tC) - t F^g(C)) / R^g. Unchanged when a constant is added to g.
Rational phi_g(const DyadicFunction& g, const BlockId& id, const Rational& t);

// The depth-m triangular array of the classical curve: x_{i,0} = C(n-i,k-i)/C(n,k),
// y_{i,0} = (h_{n-i,k-i} - x_{i,0} h_{n,k}) / (h_{n-1,k-1} - x_{1,0} h_{n,k}).
TriangularArray block_array(const BlockId& id, int m);

// Same with the R^g normalization: y_{i,0} = (h^g_{n-i,k-i} - x_{i,0} h^g_{n,k}) / R^g.
TriangularArray g_array(const DyadicFunction& g, const BlockId& id, int m);

// Pointwise curve along the orbit of x: samples of
// (F^g_x(j) - (j/l) F^g_x(l)) / R^g_x at t = j/l, with the same max-or-1 rule.
CurveSamples orbit_curve(const DyadicFunction& g, const Point& x, int l);

// sup over a uniform grid {i/grid_points} of |phi_{n,k}(t) - M_p(t)|, float64.
double phi_Mp_distance(const BlockId& id, const Rational& p, int grid_points);

}  // namespace padic
