#include <doctest.h>

#include "padic/blocks.hpp"
#include "padic/errors.hpp"

using namespace padic;

TEST_CASE("edge words and the concatenation recursion") {
    CHECK(materialize({1, 0}) == "a");
    CHECK(materialize({1, 1}) == "b");
    CHECK(materialize({2, 1}) == "ab");
    CHECK(materialize({6, 3}) == "aaabaababbaababbabbb");
    for (std::uint64_t n = 2; n <= 12; ++n)
        for (std::int64_t k = 1; static_cast<std::uint64_t>(k) < n; ++k)
            CHECK(materialize({n, k}) ==
                  materialize({n - 1, k - 1}) + materialize({n - 1, k}));
}

TEST_CASE("letter_at agrees with materialization") {
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (std::int64_t k = 0; static_cast<std::uint64_t>(k) <= n; ++k) {
            std::string w = materialize({n, k});
            for (std::size_t i = 0; i < w.size(); ++i)
                CHECK(letter_at({n, k}, BigInt(static_cast<unsigned long>(i + 1))) == w[i]);
        }
    CHECK_THROWS_AS(letter_at({4, 2}, 0), std::out_of_range);
    CHECK_THROWS_AS(letter_at({4, 2}, 7), std::out_of_range);
}

TEST_CASE("count_a_prefix against brute force and closed forms") {
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (std::int64_t k = 0; static_cast<std::uint64_t>(k) <= n; ++k) {
            std::string w = materialize({n, k});
            BigInt cnt = 0;
            CHECK(count_a_prefix({n, k}, 0) == 0);
            for (std::size_t i = 0; i < w.size(); ++i) {
                cnt += w[i] == 'a';
                CHECK(count_a_prefix({n, k}, BigInt(static_cast<unsigned long>(i + 1))) == cnt);
            }
        }
    // Full-prefix count at a size far beyond materialization.
    CHECK(count_a_prefix({200, 100}, binomial(200, 100)) == binomial(199, 100));
}

TEST_CASE("materialization cap") {
    CHECK_THROWS_AS(materialize({64, 32}), CapExceeded);
    CHECK_THROWS_AS(materialize({6, 3}, 10), CapExceeded);
}

TEST_CASE("generalized blocks reduce to the classical ones at N0=1") {
    GeneralizedBlocks gb(1);
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (std::int64_t k = 0; static_cast<std::uint64_t>(k) <= n; ++k) {
            std::string w = materialize({n, k});
            std::vector<int> v = gb.materialize({n, k});
            REQUIRE(v.size() == w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                CHECK(v[i] == (w[i] == 'a' ? 0 : 1));
        }
}

TEST_CASE("generalized blocks over three letters") {
    GeneralizedBlocks gb(2);
    CHECK(gb.materialize({2, 1}) == std::vector<int>{1});
    CHECK(gb.materialize({3, 1}) == std::vector<int>{0, 1});
    CHECK(gb.materialize({3, 2}) == std::vector<int>{1, 2});
    CHECK(gb.letter_at({3, 1}, 2) == 1);
    // Letter-lengths obey the same Pascal-style recursion as the words.
    for (std::uint64_t n = 3; n <= 20; ++n)
        for (std::int64_t k = 1; static_cast<std::uint64_t>(k) < n; ++k)
            CHECK(gb.letter_length({n, k}) ==
                  gb.letter_length({n - 1, k - 1}) + gb.letter_length({n - 1, k}));
}
