#include <doctest.h>

#include "padic/exact.hpp"

using namespace padic;

TEST_CASE("binomial values and out-of-range zeros") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(10, 11) == 0);
    // Across the dense-row boundary the two computation paths must agree.
    for (std::int64_t k = 0; k <= 300; k += 37)
        CHECK(binomial(300, k) == binomial(299, k - 1) + binomial(299, k));
}

TEST_CASE("block_height closed form") {
    CHECK(block_height(6, 3) == 0);
    CHECK(block_height(3, 1) == 1);
    CHECK(block_height(4, 1) == 2);
    CHECK(Rational(block_height(9, 2)) ==
          make_rational(9 - 4, 9) * Rational(binomial(9, 2)));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(to_exact_string(make_rational(-3, 4)) == "-3/4");
    CHECK(to_decimal_string(make_rational(1, 3)) == "0.333333333333");
    CHECK(rational_floor(make_rational(-1, 2)) == -1);
}

TEST_CASE("polynomial arithmetic and root multiplicity") {
    Polynomial p({Rational(0), Rational(2), Rational(-2)});  // 2p(1-p)
    CHECK(p.eval(make_rational(1, 2)) == make_rational(1, 2));
    CHECK(p.degree() == 2);
    CHECK(p.sign_at(make_rational(1, 4)) == 1);
    Polynomial z = p - p;
    CHECK(z.is_zero());
    // (p - 1/2)^3 * (p + 1)
    Polynomial f({make_rational(-1, 2), Rational(1)});
    Polynomial g = f * f * f * Polynomial({Rational(1), Rational(1)});
    CHECK(g.zero_multiplicity_at(make_rational(1, 2)) == 3);
    CHECK(g.zero_multiplicity_at(Rational(-1)) == 1);
    CHECK(g.zero_multiplicity_at(Rational(2)) == 0);
}
