#include "padic/exact.hpp"

#include <array>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace padic {

namespace {

// Dense Pascal rows for the small-n regime, which positional block queries
// hammer with O(n) lookups each. Larger arguments go straight to GMP's
// mpz_bin_uiui; caching every row up to n ~ 5000 would cost gigabytes.
constexpr std::uint64_t kDenseRows = 257;

const std::vector<std::vector<BigInt>>& dense_binomials() {
    static const std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> t(kDenseRows);
        for (std::uint64_t n = 0; n < kDenseRows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = 1;
            t[n][n] = 1;
            for (std::uint64_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

std::atomic<bool> binomial_fault{false};

}  // namespace

void set_binomial_fault(bool enabled) { binomial_fault.store(enabled); }

BigInt binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    if (binomial_fault.load(std::memory_order_relaxed) && n == 6 && k == 3) return 21;
    if (n < kDenseRows) return dense_binomials()[n][static_cast<std::size_t>(k)];
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt block_height(std::uint64_t n, std::int64_t k) {
    // #a in B_{n,k} is C(n-1,k), so the height is 2 C(n-1,k) - C(n,k).
    if (n == 0) return 0;
    return 2 * binomial(n - 1, k) - binomial(n, k);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt rational_floor(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_exact_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal_string(double v, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
    return to_decimal_string(q.get_d(), significant_digits);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& p) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& p) const { return sgn(eval(p)); }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) v[i] += rhs.coeffs_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

int Polynomial::zero_multiplicity_at(const Rational& r) const {
    if (is_zero()) return 0;
    int mult = 0;
    std::vector<Rational> cur = coeffs_;
    while (cur.size() > 0) {
        // Synthetic division by (p - r): b_{d-1} = a_d, b_{i-1} = a_i + r b_i,
        // remainder a_0 + r b_0. Remainder zero means r divides once more.
        std::vector<Rational> b(cur.size() - 1);
        Rational carry = 0;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = cur[i] + r * carry;
            b[i - 1] = carry;
        }
        Rational rem = cur[0] + r * carry;
        if (sgn(rem) != 0) break;
        ++mult;
        cur = std::move(b);
        if (cur.empty()) break;
    }
    return mult;
}

}  // namespace padic
