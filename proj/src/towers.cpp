#include "padic/towers.hpp"

#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

Rational Point::value() const {
    BigInt num = 0;
    for (bool d : digits) {
        num <<= 1;
        if (d) num += 1;
    }
    return make_rational(num, BigInt(1) << depth());
}

Point Point::from_string(const std::string& s) {
    Point p;
    std::size_t start = s.rfind('.');
    start = (start == std::string::npos) ? 0 : start + 1;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '0')
            p.digits.push_back(false);
        else if (s[i] == '1')
            p.digits.push_back(true);
        else
            throw std::invalid_argument("point digits must be 0/1");
    }
    if (p.digits.empty()) throw std::invalid_argument("point needs at least one digit");
    return p;
}

std::string Point::to_string() const {
    std::string s = "0.";
    for (bool d : digits) s.push_back(d ? '1' : '0');
    return s;
}

std::uint64_t Point::interval_index(int n) const {
    if (n < 1 || n > depth()) throw std::out_of_range("interval_index: level beyond depth");
    std::uint64_t j = 0;
    for (int i = 0; i < n; ++i) j = (j << 1) | static_cast<std::uint64_t>(digits[i] ? 1 : 0);
    return j;
}

TowerSystem::TowerSystem(int level_cap) : cap_(level_cap) {
    if (level_cap < 1 || level_cap > 40) throw std::invalid_argument("tower level cap out of range");
}

void TowerSystem::ensure(int n) const {
    if (n > cap_) throw CapExceeded("tower level " + std::to_string(n) + " beyond cap");
    std::lock_guard lock(mu_);
    while (static_cast<int>(levels_.size()) < n) {
        int lvl = static_cast<int>(levels_.size()) + 1;
        std::vector<Tower> towers;
        if (lvl == 1) {
            towers.push_back({1, 0, {0}});
            towers.push_back({1, 1, {1}});
        } else {
            const std::vector<Tower>& prev = levels_.back();
            towers.resize(static_cast<std::size_t>(lvl) + 1);
            for (int k = 0; k <= lvl; ++k) {
                Tower& t = towers[static_cast<std::size_t>(k)];
                t.n = static_cast<std::uint64_t>(lvl);
                t.k = k;
                // Bottom part: right sub-column of tau_{n,k-1}; top part: left
                // sub-column of tau_{n,k}. Halving rung [j,j+1)*2^{-n} gives the
                // level-(n+1) intervals 2j (left) and 2j+1 (right).
                if (k > 0)
                    for (std::uint64_t j : prev[static_cast<std::size_t>(k - 1)].rungs)
                        t.rungs.push_back(2 * j + 1);
                if (k < lvl)
                    for (std::uint64_t j : prev[static_cast<std::size_t>(k)].rungs)
                        t.rungs.push_back(2 * j);
            }
        }
        std::vector<std::pair<int, std::uint64_t>> loc(std::uint64_t{1} << lvl);
        for (const Tower& t : towers)
            for (std::uint64_t r = 0; r < t.rungs.size(); ++r)
                loc[t.rungs[r]] = {static_cast<int>(t.k), r};
        levels_.push_back(std::move(towers));
        locate_.push_back(std::move(loc));
    }
}

const std::vector<Tower>& TowerSystem::level(int n) const {
    if (n < 1) throw std::invalid_argument("tower level must be >= 1");
    ensure(n);
    std::lock_guard lock(mu_);
    return levels_[static_cast<std::size_t>(n - 1)];
}

std::pair<int, std::uint64_t> TowerSystem::locate(int n, std::uint64_t j) const {
    ensure(n);
    std::lock_guard lock(mu_);
    return locate_[static_cast<std::size_t>(n - 1)].at(j);
}

Point TowerSystem::apply_T(const Point& x) const {
    int max_level = std::min(x.depth(), cap_);
    for (int n = 1; n <= max_level; ++n) {
        std::uint64_t j = x.interval_index(n);
        auto [k, r] = locate(n, j);
        const Tower& t = level(n)[static_cast<std::size_t>(k)];
        if (r + 1 < t.rungs.size()) {
            // Dyadic translation onto the next rung; digits below level n are kept.
            std::uint64_t j2 = t.rungs[r + 1];
            Point out = x;
            for (int i = n - 1; i >= 0; --i) {
                out.digits[static_cast<std::size_t>(i)] = (j2 & 1) != 0;
                j2 >>= 1;
            }
            return out;
        }
    }
    throw UndefinedAtDepth("point is on a top rung at every level up to depth " +
                           std::to_string(max_level));
}

const TowerSystem& shared_towers() {
    static TowerSystem sys;
    return sys;
}

int k_n(const Point& x, int n) {
    if (n < 1 || n > x.depth()) throw std::out_of_range("k_n: level beyond depth");
    int s = 0;
    for (int i = 0; i < n; ++i) s += x.digits[static_cast<std::size_t>(i)] ? 1 : 0;
    return s;
}

BigInt rung_index(const Point& x, int n) {
    if (n < 1 || n > x.depth()) throw std::out_of_range("rung_index: level beyond depth");
    // Digit recursion: a 1-digit enters the bottom part of tau_{n+1,k+1} (r keeps),
    // a 0-digit enters the top part of tau_{n+1,k}, stacked above C(n,k-1) rungs.
    BigInt r = 0;
    int k = x.digits[0] ? 1 : 0;
    for (int i = 1; i < n; ++i) {
        if (x.digits[static_cast<std::size_t>(i)]) {
            ++k;
        } else {
            r += binomial(static_cast<std::uint64_t>(i), k - 1);
        }
    }
    return r;
}

Point sample_mu_p(const Rational& p, int depth, std::mt19937_64& rng) {
    if (sgn(p) <= 0 || p >= 1) throw std::domain_error("sample_mu_p: p must be in (0,1)");
    std::bernoulli_distribution coin(p.get_d());
    Point x;
    x.digits.reserve(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) x.digits.push_back(coin(rng));
    return x;
}

Rational mu_p_interval(const Rational& p, const std::vector<bool>& digits) {
    Rational m = 1;
    for (bool d : digits) m *= d ? p : 1 - p;
    return m;
}

std::optional<int> find_subsequence(const Point& x, int s, int n_max) {
    if (s < 1) throw std::invalid_argument("find_subsequence: s must be >= 1");
    if (n_max > x.depth()) throw std::out_of_range("find_subsequence: n_max beyond depth");
    // Incremental form of the rung_index digit recursion, O(1) binomials per level.
    BigInt r = 0;
    int k = 0;
    for (int n = 1; n <= n_max; ++n) {
        if (x.digits[static_cast<std::size_t>(n - 1)])
            ++k;
        else if (k > 0)
            r += binomial(static_cast<std::uint64_t>(n - 1), k - 1);
        BigInt threshold = binomial(static_cast<std::uint64_t>(n), k) / s;  // floor
        if (r < threshold) return n;
    }
    return std::nullopt;
}

}  // namespace padic
