#include <doctest.h>

#include <random>

#include "padic/dyadic.hpp"
#include "padic/towers.hpp"

using namespace padic;

TEST_CASE("tower sums of the named functions") {
    CHECK(tower_sums(DyadicFunction::ab_indicator()) ==
          std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(tower_sums(DyadicFunction::coboundary_example()) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    DyadicFunction one = DyadicFunction::constant(4, Rational(1));
    std::vector<Rational> h = tower_sums(one);
    for (int l = 0; l <= 4; ++l) CHECK(h[static_cast<std::size_t>(l)] == Rational(binomial(4, l)));
}

TEST_CASE("tower_sum_nk equals the lifted concatenation recursion") {
    DyadicFunction g = transition_family(3);
    std::vector<Rational> h = tower_sums(g);
    CHECK(h == std::vector<Rational>{Rational(1), Rational(-3), Rational(3), Rational(-1)});
    // Recompute h_{n,k} from one more level of lifting and compare.
    std::vector<Rational> h4 = tower_sums(g.lift());
    for (std::uint64_t n = 4; n <= 12; ++n)
        for (std::int64_t k = 0; static_cast<std::uint64_t>(k) <= n; ++k)
            CHECK(tower_sum_nk(h, 3, n, k) == tower_sum_nk(h4, 4, n, k));
}

TEST_CASE("P^g: closed forms, lifting, covariance identity") {
    Polynomial p1 = polynomial_Pg(DyadicFunction::ab_indicator());
    CHECK(p1 == Polynomial({Rational(0), Rational(2), Rational(-2)}));
    CHECK(polynomial_Pg(DyadicFunction::constant(3, make_rational(5, 7))).is_zero());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n0 = 1 + static_cast<int>(rng() % 5);
        DyadicFunction g{n0, {}};
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n0); ++w)
            g.values.push_back(make_rational(static_cast<long>(rng() % 19) - 9,
                                             1 + static_cast<long>(rng() % 7)));
        Polynomial p = polynomial_Pg(g);
        CHECK(p == covariance_Pg(g));
        CHECK(p == polynomial_Pg(g.lift()));
        CHECK(p == polynomial_Pg(g + make_rational(3, 2)));
    }
}

TEST_CASE("transition family: closed form of P and the zero at 1/2") {
    // P^{g_{N0}}(p) = 2 N0 p (1-p) (1-2p)^{N0-1}, derived from the binomial
    // sums directly. (The two-term recurrence sometimes quoted for this family
    // fails already at p = 0, where every P^g must vanish.)
    for (int n0 = 1; n0 <= 7; ++n0) {
        Polynomial want({Rational(0), Rational(2 * n0), Rational(-2 * n0)});
        Polynomial twist({Rational(1), Rational(-2)});
        for (int i = 1; i < n0; ++i) want = want * twist;
        Polynomial got = polynomial_Pg(transition_family(n0));
        CHECK(got == want);
        CHECK(got.zero_multiplicity_at(make_rational(1, 2)) == n0 - 1);
    }
}

TEST_CASE("cohomology detector") {
    auto cb = cohomology_test(DyadicFunction::coboundary_example());
    REQUIRE(cb.has_value());
    CHECK(cb->constant == 0);
    // The transfer differs from -1_{[1/2,3/4)} by a constant on each tower.
    DyadicFunction ref{2, {Rational(0), Rational(0), Rational(-1), Rational(0)}};
    const TowerSystem& sys = shared_towers();
    for (const Tower& t : sys.level(2)) {
        Rational diff = cb->transfer.on_word(t.rungs[0]) - ref.on_word(t.rungs[0]);
        for (std::uint64_t j : t.rungs)
            CHECK(cb->transfer.on_word(j) - ref.on_word(j) == diff);
    }
    auto c5 = cohomology_test(DyadicFunction::constant(3, Rational(5)));
    REQUIRE(c5.has_value());
    CHECK(c5->constant == 5);
    for (const Rational& v : c5->transfer.values) CHECK(v == 0);
    CHECK(!cohomology_test(DyadicFunction::ab_indicator()).has_value());
}

TEST_CASE("P^g vanishes iff g is cohomologous to a constant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int n0 = 1 + static_cast<int>(rng() % 4);
        DyadicFunction g{n0, {}};
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n0); ++w)
            g.values.push_back(Rational(static_cast<long>(rng() % 7) - 3));
        bool coh = cohomology_test(g).has_value();
        CHECK(coh == polynomial_Pg(g).is_zero());
    }
    // Near-proportional tower sums must still be rejected.
    DyadicFunction g{2, {Rational(1), Rational(2), Rational(2), make_rational(999, 1000)}};
    CHECK(!cohomology_test(g).has_value());
    CHECK(!polynomial_Pg(g).is_zero());
}

TEST_CASE("S_ratio matches the tower sums of the transition family") {
    for (int n0 = 1; n0 <= 4; ++n0) {
        std::vector<Rational> h = tower_sums(transition_family(n0));
        for (std::uint64_t n = static_cast<std::uint64_t>(n0); n <= 12; ++n)
            for (std::int64_t k = 0; static_cast<std::uint64_t>(k) <= n; ++k)
                CHECK(S_ratio(n0, n, k) * Rational(binomial(n, k)) == tower_sum_nk(h, n0, n, k));
    }
}

TEST_CASE("JSON round trip") {
    DyadicFunction g = DyadicFunction::from_json(
        R"({"level": 2, "values": ["1/2", "-1", "0", "3"]})");
    CHECK(g.level == 2);
    CHECK(g.on_word(0) == make_rational(1, 2));
    CHECK(g.on_word(3) == 3);
    DyadicFunction again = DyadicFunction::from_json(g.to_json());
    CHECK(again.values == g.values);
    CHECK_THROWS(DyadicFunction::from_json(R"({"level": 2, "values": ["1/2"]})"));
    CHECK_THROWS(DyadicFunction::from_json(R"({"level": 0, "values": []})"));
}

TEST_CASE("at_point reads the right dyadic interval") {
    DyadicFunction g = DyadicFunction::coboundary_example();
    CHECK(g.at_point(Point::from_string("0.0110")) == 1);
    CHECK(g.at_point(Point::from_string("0.10")) == -1);
    CHECK_THROWS_AS(g.at_point(Point::from_string("0.1")), std::out_of_range);
}
