#pragma once

#include <utility>
#include <vector>

#include "padic/curve_samples.hpp"
#include "padic/exact.hpp"

namespace padic {

// An affine map of the plane: (x,y) -> (a x + b y + e, c x + d y + f), exact.
struct AffineMap2 {
    Rational a, b, e;
    Rational c, d, f;

    std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const {
        return {a * x + b * y + e, c * x + d * y + f};
    }
};

enum class Side { Left, Right };

// The two contractions whose attractor is the graph of M_p:
//   left : (x,y) -> (p x, p y + x)
//   right: (x,y) -> ((1-p) x + p, (1-p) y - x + 1)
AffineMap2 alpha(Side side, const Rational& p);
std::pair<Rational, Rational> apply_alpha(Side side, const Rational& p, const Rational& x,
                                          const Rational& y);

// Ascending triangular array of (x,y) displacement pairs. Line i has i+1
// entries; entry (i,j) is the sum of entries (i+1,j) and (i+1,j+1). The whole
// array is determined by its lower-left side (x_{i,0}, y_{i,0}).
class TriangularArray {
  public:
    TriangularArray() = default;

    // Reconstructs all entries from the lower-left side by the subtraction dual
    // of the additive property.
    static TriangularArray from_side(std::vector<std::pair<Rational, Rational>> side);

    int depth() const { return static_cast<int>(lines_.size()) - 1; }  // m
    const Rational& x(int i, int j) const { return lines_[i][j].first; }
    const Rational& y(int i, int j) const { return lines_[i][j].second; }

    // Exact check of the additive property on every interior entry.
    bool additive_ok() const;

    // The piecewise-linear curve phi_A on [0, x_{0,0}], 2^m breakpoints.
    // Zero-width entries (degenerate sub-blocks) are skipped.
    CurveSamples to_polyline() const;

    // Left/right subarrays with m lines: line i of the left one is the first
    // i+1 pairs of line i+1, the right one takes the last i+1 pairs.
    std::pair<TriangularArray, TriangularArray> split() const;

  private:
    std::vector<std::vector<std::pair<Rational, Rational>>> lines_;
};

// The array whose polyline is the depth-m approximation of M_p:
// side x_{i,0} = p^i, y_{i,0} = i p^{i-1}.
TriangularArray canonical_array(const Rational& p, int m);

// Transition-regime array: side x_{i,0} = 2^{-i}, y_{i,0} = i(i-1)(1/2)^{i-2}.
TriangularArray transition_array(int m);

// One-parameter family: side x = p^i, y = i(i-1)...(i-s) p^{i-s-1} (zero for i <= s).
TriangularArray family_array(const Rational& p, int s, int m);

// Subarray of `a` starting at line i0, x rescaled to total 1, linear trend
// removed, and the y side divided by the polyline's sup norm. Sup-norm
// scaling is the vertical renormalization that makes the tails converge to
// M/||M||; scaling the first interior breakpoint to 1 instead does not.
TriangularArray renormalized_tail_array(const TriangularArray& a, int i0);

// M_p(t) within eps, by exact-rational descent through the IFS. Ties at the
// shared vertex take the left branch (both branches agree there).
double eval_Mp(const Rational& p, const Rational& t, double eps);

// True iff samples agree with phi_A within tol at every breakpoint of the array.
bool compatible(const CurveSamples& samples, const TriangularArray& a, double tol);

}  // namespace padic
