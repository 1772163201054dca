#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace padic {

// Exact arithmetic substrate. All higher modules compute in these types and
// convert to double only at the output boundary.
using BigInt = mpz_class;

// mpq_class canonicalizes (lowest terms, positive denominator) on every
// operation, which keeps denominators under control along recursive descents.
using Rational = mpq_class;

// C(n,k), exact; 0 when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

// Fault-injection hook for the self-test: while enabled, binomial(6,3) is off
// by one, which must make the height-identity check fail by name.
void set_binomial_fault(bool enabled);

// Height of the basic block B_{n,k}: (#a - #b) = ((n-2k)/n) C(n,k), an exact integer.
BigInt block_height(std::uint64_t n, std::int64_t k);

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// floor(q) as a BigInt.
BigInt rational_floor(const Rational& q);

// Parses "3", "-3", "3/4", "-3/4". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// "num/den" (or just "num" when den == 1).
std::string to_exact_string(const Rational& q);

// Decimal with the given number of significant digits (CLI output convention).
std::string to_decimal_string(const Rational& q, int significant_digits = 12);
std::string to_decimal_string(double v, int significant_digits = 12);

double to_double(const Rational& q);

// Dense polynomial in one variable with exact rational coefficients,
// coefficient index = power of p. Invariant: no trailing zero coefficient.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    // The monomial c * p^k.
    static Polynomial monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational eval(const Rational& p) const;
    // Sign of the exact evaluation: -1, 0 or +1.
    int sign_at(const Rational& p) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const = default;

    // Multiplicity of the root at p = r (0 when P(r) != 0); exact synthetic division.
    int zero_multiplicity_at(const Rational& r) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace padic
