#include <doctest.h>

#include <cmath>

#include "padic/selfaffine.hpp"

using namespace padic;

TEST_CASE("the two contractions") {
    Rational p = make_rational(2, 5);
    auto [lx, ly] = apply_alpha(Side::Left, p, Rational(1), Rational(0));
    CHECK(lx == p);
    CHECK(ly == 1);  // M_p(p) = 1: the cusp of the first subdivision
    auto [rx, ry] = apply_alpha(Side::Right, p, Rational(0), Rational(0));
    CHECK(rx == p);
    CHECK(ry == 1);
    auto [ex, ey] = apply_alpha(Side::Right, p, Rational(1), Rational(0));
    CHECK(ex == 1);
    CHECK(ey == 0);
    CHECK_THROWS_AS(alpha(Side::Left, Rational(1)), std::domain_error);
}

TEST_CASE("canonical array at p=1/2, depth 3") {
    TriangularArray a = canonical_array(make_rational(1, 2), 3);
    CHECK(a.depth() == 3);
    CHECK(a.additive_ok());
    CHECK(a.x(0, 0) == 1);
    CHECK(a.y(0, 0) == 0);
    CHECK(a.y(1, 0) == 1);
    CHECK(a.y(1, 1) == -1);
    CHECK(a.y(2, 1) == 0);
    CHECK(a.y(3, 0) == make_rational(3, 4));
    CHECK(a.y(3, 3) == make_rational(-3, 4));
    CurveSamples c = a.to_polyline();
    REQUIRE(c.size() == 9);
    CHECK(c.values[1] == make_rational(3, 4));
    CHECK(c.values[2] == 1);
    CHECK(c.values[3] == make_rational(5, 4));
    CHECK(c.values.back() == 0);
}

TEST_CASE("split pastes back into the parent polyline") {
    Rational p = make_rational(1, 3);
    TriangularArray a = canonical_array(p, 5);
    auto [left, right] = a.split();
    CHECK(left.additive_ok());
    CHECK(right.additive_ok());
    CurveSamples whole = a.to_polyline();
    CurveSamples lp = left.to_polyline();
    CurveSamples rp = right.to_polyline();
    Rational x10 = a.x(1, 0);
    Rational y10 = a.y(1, 0);
    for (std::size_t i = 0; i < lp.size(); ++i) CHECK(whole.eval(lp.ts[i]) == lp.values[i]);
    for (std::size_t i = 0; i < rp.size(); ++i)
        CHECK(whole.eval(x10 + rp.ts[i]) == y10 + rp.values[i]);
}

TEST_CASE("eval_Mp matches the polyline stages and the Takagi oracle") {
    Rational p = make_rational(2, 5);
    CurveSamples c = canonical_array(p, 14).to_polyline();
    // The polyline interpolates between breakpoints; the widest depth-14
    // segment has width (3/5)^14, which bounds the interpolation error.
    for (int i = 0; i <= 16; ++i) {
        Rational t = make_rational(i, 16);
        CHECK(std::fabs(eval_Mp(p, t, 1e-12) - to_double(c.eval(t))) < 2e-3);
    }
    // M_{1/2}(1/3) = ||M_{1/2}|| = 4/3.
    CHECK(std::fabs(eval_Mp(make_rational(1, 2), make_rational(1, 3), 1e-12) - 4.0 / 3.0) < 1e-11);
    CHECK(eval_Mp(p, Rational(0), 1e-12) == 0.0);
    CHECK(eval_Mp(p, Rational(1), 1e-12) == 0.0);
}

TEST_CASE("compatibility of M_p with its arrays") {
    Rational p = make_rational(1, 2);
    TriangularArray a = canonical_array(p, 6);
    CurveSamples fine = canonical_array(p, 12).to_polyline();
    CHECK(compatible(fine, a, 1e-12));
    // A vertically shifted curve is not compatible.
    for (auto& v : fine.values) v += make_rational(1, 100);
    CHECK(!compatible(fine, a, 1e-3));
}

TEST_CASE("transition and family sides") {
    TriangularArray t = transition_array(5);
    CHECK(t.additive_ok());
    CHECK(t.x(3, 0) == make_rational(1, 8));
    CHECK(t.y(0, 0) == 0);
    CHECK(t.y(1, 0) == 0);
    CHECK(t.y(3, 0) == 3 * 2 * make_rational(1, 2));  // i(i-1)(1/2)^{i-2}
    TriangularArray f = family_array(make_rational(1, 2), 1, 5);
    CHECK(f.additive_ok());
    CHECK(f.y(1, 0) == 0);
    CHECK(f.y(3, 0) == 3 * 2 * make_rational(1, 2));  // i(i-1)p^{i-2} at s=1
    // First line past the zero range: i = s+1 gives (s+1)! p^0.
    TriangularArray f0 = family_array(make_rational(1, 3), 1, 4);
    CHECK(f0.y(2, 0) == 2);
}

TEST_CASE("renormalized tails approach M_{1/2} scaled to unit sup") {
    TriangularArray a = transition_array(26);
    CurveSamples t10 = renormalized_tail_array(a, 10).to_polyline();
    CurveSamples t20 = renormalized_tail_array(a, 14).to_polyline();
    Rational p = make_rational(1, 2);
    auto dist = [&](const CurveSamples& c) {
        double worst = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            worst = std::max(worst, std::fabs(to_double(c.values[i]) -
                                              0.75 * eval_Mp(p, c.ts[i], 1e-10)));
        return worst;
    };
    CHECK(t10.max_abs() == 1);
    CHECK(dist(t20) < dist(t10));  // error decays roughly like 1/i0
}
