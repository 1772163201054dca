#include <doctest.h>

#include <random>

#include "padic/errors.hpp"
#include "padic/towers.hpp"

using namespace padic;

TEST_CASE("tower construction at small levels") {
    const TowerSystem& sys = shared_towers();
    REQUIRE(sys.level(1).size() == 2);
    CHECK(sys.level(1)[0].rungs == std::vector<std::uint64_t>{0});
    CHECK(sys.level(1)[1].rungs == std::vector<std::uint64_t>{1});
    REQUIRE(sys.level(2).size() == 3);
    CHECK(sys.level(2)[1].rungs == std::vector<std::uint64_t>{1, 2});  // [1/4,1/2), [1/2,3/4)
    CHECK(sys.level(3)[1].rungs == std::vector<std::uint64_t>{1, 2, 4});
    // Heights are binomial and the rungs partition the level.
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> seen(std::size_t{1} << n, 0);
        for (const Tower& t : sys.level(n)) {
            CHECK(BigInt(static_cast<unsigned long>(t.rungs.size())) ==
                  binomial(t.n, t.k));
            for (std::uint64_t j : t.rungs) ++seen[j];
        }
        for (int c : seen) CHECK(c == 1);
    }
}

TEST_CASE("apply_T on the classical examples") {
    const TowerSystem& sys = shared_towers();
    CHECK(sys.apply_T(Point::from_string("0.01")).to_string() == "0.10");   // T(1/4) = 1/2
    CHECK(sys.apply_T(Point::from_string("0.011")).to_string() == "0.101");  // T(3/8) = 5/8
    CHECK_THROWS_AS(sys.apply_T(Point::from_string("0.1000000")), UndefinedAtDepth);
}

TEST_CASE("digit statistics: k_n and rung_index") {
    Point x = Point::from_string("0.011");
    CHECK(k_n(x, 3) == 2);
    CHECK(k_n(Point::from_string("0.000"), 3) == 0);
    CHECK(k_n(Point::from_string("0.100"), 1) == 1);
    CHECK(rung_index(Point::from_string("0.10"), 2) == 1);  // top of tau_{2,1}
    CHECK(rung_index(Point::from_string("0.01"), 2) == 0);  // base of tau_{2,1}
    CHECK(rung_index(Point::from_string("0.0000"), 4) == 0);
}

TEST_CASE("mu_p measures") {
    Rational p = make_rational(1, 3);
    CHECK(mu_p_interval(p, {true}) == p);
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
            std::vector<bool> digits;
            for (int i = n - 1; i >= 0; --i) digits.push_back((j >> i) & 1);
            total += mu_p_interval(p, digits);
        }
        CHECK(total == 1);
    }
    // Each rung of tau_{N0,l} has measure p^l (1-p)^{N0-l}.
    for (const Tower& t : shared_towers().level(5)) {
        Rational want = 1;
        for (std::int64_t i = 0; i < t.k; ++i) want *= p;
        for (std::int64_t i = t.k; i < 5; ++i) want *= 1 - p;
        for (std::uint64_t j : t.rungs) {
            std::vector<bool> digits;
            for (int i = 4; i >= 0; --i) digits.push_back((j >> i) & 1);
            CHECK(mu_p_interval(p, digits) == want);
        }
    }
}

TEST_CASE("sampling is deterministic under a fixed seed") {
    std::mt19937_64 a(7), b(7);
    Point xa = sample_mu_p(make_rational(1, 2), 64, a);
    Point xb = sample_mu_p(make_rational(1, 2), 64, b);
    CHECK(xa.digits == xb.digits);
}

TEST_CASE("find_subsequence boundary semantics") {
    CHECK(find_subsequence(Point::from_string("0.0000"), 1, 4) == 1);
    // k_n/n drifts to 1/2 under mu_{1/2}, so moderate s succeeds quickly.
    std::mt19937_64 rng(11);
    Point x = sample_mu_p(make_rational(1, 2), 200, rng);
    CHECK(find_subsequence(x, 5, 200).has_value());
    CHECK_THROWS_AS(find_subsequence(Point::from_string("0.01"), 0, 2), std::invalid_argument);
}
