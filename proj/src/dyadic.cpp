#include "padic/dyadic.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace padic {

DyadicFunction DyadicFunction::constant(int level, const Rational& c) {
    if (level < 1 || level > 24) throw std::invalid_argument("dyadic level out of range");
    return {level, std::vector<Rational>(std::size_t{1} << level, c)};
}

DyadicFunction DyadicFunction::ab_indicator() {
    return {1, {Rational(1), Rational(-1)}};
}

DyadicFunction DyadicFunction::coboundary_example() {
    return {2, {Rational(0), Rational(1), Rational(-1), Rational(0)}};
}

const Rational& DyadicFunction::at_point(const Point& x) const {
    if (x.depth() < level) throw std::out_of_range("point too shallow for this dyadic level");
    return values.at(x.interval_index(level));
}

DyadicFunction DyadicFunction::lift() const {
    DyadicFunction up{level + 1, std::vector<Rational>(values.size() * 2)};
    for (std::size_t w = 0; w < values.size(); ++w) {
        up.values[2 * w] = values[w];
        up.values[2 * w + 1] = values[w];
    }
    return up;
}

DyadicFunction DyadicFunction::operator+(const Rational& c) const {
    DyadicFunction out = *this;
    for (auto& v : out.values) v += c;
    return out;
}

DyadicFunction DyadicFunction::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DyadicFunction g;
    g.level = j.at("level").get<int>();
    if (g.level < 1 || g.level > 24) throw std::invalid_argument("dyadic level out of range");
    for (const auto& v : j.at("values")) g.values.push_back(parse_rational(v.get<std::string>()));
    if (g.values.size() != (std::size_t{1} << g.level))
        throw std::invalid_argument("dyadic function needs 2^level values");
    return g;
}

DyadicFunction DyadicFunction::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string DyadicFunction::to_json() const {
    nlohmann::json j;
    j["level"] = level;
    auto& arr = j["values"] = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(to_exact_string(v));
    return j.dump();
}

std::vector<Rational> tower_sums(const DyadicFunction& g) {
    const auto& towers = shared_towers().level(g.level);
    std::vector<Rational> h(static_cast<std::size_t>(g.level) + 1);
    for (const Tower& t : towers) {
        Rational s = 0;
        for (std::uint64_t j : t.rungs) s += g.on_word(j);
        h[static_cast<std::size_t>(t.k)] = s;
    }
    return h;
}

std::vector<std::vector<Rational>> tower_prefix_sums(const DyadicFunction& g) {
    const auto& towers = shared_towers().level(g.level);
    std::vector<std::vector<Rational>> out(towers.size());
    for (const Tower& t : towers) {
        auto& pre = out[static_cast<std::size_t>(t.k)];
        pre.push_back(Rational(0));
        for (std::uint64_t j : t.rungs) pre.push_back(pre.back() + g.on_word(j));
    }
    return out;
}

Rational tower_sum_nk(const std::vector<Rational>& h, int n0, std::uint64_t n, std::int64_t k) {
    Rational s = 0;
    for (int l = 0; l <= n0; ++l)
        s += h[static_cast<std::size_t>(l)] * Rational(binomial(n - n0, k - l));
    return s;
}

Polynomial polynomial_Pg(const DyadicFunction& g) {
    std::vector<Rational> h = tower_sums(g);
    const int n0 = g.level;
    Polynomial p = Polynomial::monomial(Rational(1), 1);
    Polynomial one_minus_p = Polynomial({Rational(1), Rational(-1)});
    Polynomial acc;
    for (int l = 0; l <= n0; ++l) {
        Polynomial term = Polynomial::constant(h[static_cast<std::size_t>(l)]);
        for (int i = 0; i < l; ++i) term = term * p;
        for (int i = 0; i < n0 - l; ++i) term = term * one_minus_p;
        term = term * Polynomial({Rational(-l), Rational(n0)});  // N0 p - l
        acc = acc + term;
    }
    return acc;
}

Polynomial covariance_Pg(const DyadicFunction& g) {
    const int n0 = g.level;
    Polynomial p = Polynomial::monomial(Rational(1), 1);
    Polynomial one_minus_p = Polynomial({Rational(1), Rational(-1)});
    Polynomial e_g, e_gs;  // E[g], E[g * digit sum], as polynomials in p
    for (std::uint64_t w = 0; w < g.values.size(); ++w) {
        Polynomial weight = Polynomial::constant(Rational(1));
        for (int i = n0 - 1; i >= 0; --i) weight = weight * (((w >> i) & 1) ? p : one_minus_p);
        int digit_sum = std::popcount(w);
        e_g = e_g + weight * g.values[w];
        e_gs = e_gs + weight * (g.values[w] * Rational(digit_sum));
    }
    Polynomial e_s = Polynomial::monomial(Rational(n0), 1);  // E[X_1+...+X_N0] = N0 p
    return -(e_gs - e_g * e_s);
}

std::optional<CohomologyResult> cohomology_test(const DyadicFunction& g) {
    std::vector<Rational> h = tower_sums(g);
    const int n0 = g.level;
    Rational c = h[0];  // h_0 / C(N0,0)
    for (int l = 0; l <= n0; ++l)
        if (h[static_cast<std::size_t>(l)] != c * Rational(binomial(n0, l))) return std::nullopt;
    DyadicFunction f = DyadicFunction::constant(n0, Rational(0));
    for (const Tower& t : shared_towers().level(n0)) {
        Rational acc = 0;
        for (std::uint64_t j : t.rungs) {
            f.values[j] = -acc;
            acc += g.on_word(j) - c;
        }
    }
    return CohomologyResult{c, std::move(f)};
}

DyadicFunction transition_family(int n0) {
    if (n0 < 1 || n0 > 24) throw std::invalid_argument("transition_family: level out of range");
    DyadicFunction g{n0, std::vector<Rational>(std::size_t{1} << n0)};
    for (std::uint64_t w = 0; w < g.values.size(); ++w)
        g.values[w] = (std::popcount(w) % 2 == 0) ? Rational(1) : Rational(-1);
    return g;
}

Rational S_ratio(int n0, std::uint64_t n, std::int64_t k) {
    if (n0 < 1) throw std::invalid_argument("S_ratio: N0 must be >= 1");
    if (n < static_cast<std::uint64_t>(n0)) throw std::invalid_argument("S_ratio: need n >= N0");
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    if (n0 == 1) return make_rational(BigInt(n) - 2 * k, BigInt(n));
    return (1 - make_rational(BigInt(k), BigInt(n))) * S_ratio(n0 - 1, n - 1, k) -
           make_rational(BigInt(k), BigInt(n)) * S_ratio(n0 - 1, n - 1, k - 1);
}

Rational transition_numerator(int n0, std::uint64_t k, int i) {
    std::vector<Rational> h;
    h.reserve(static_cast<std::size_t>(n0) + 1);
    for (int l = 0; l <= n0; ++l)
        h.push_back((l % 2 == 0 ? 1 : -1) * Rational(binomial(n0, l)));
    std::uint64_t n = 2 * k;
    Rational x = make_rational(binomial(n - i, static_cast<std::int64_t>(k) - i), binomial(n, k));
    return tower_sum_nk(h, n0, n - i, static_cast<std::int64_t>(k) - i) -
           x * tower_sum_nk(h, n0, n, static_cast<std::int64_t>(k));
}

}  // namespace padic
