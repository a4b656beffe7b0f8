#pragma once

/**
 * @file exact.hpp
 * @brief Exact integer/rational arithmetic and dense univariate polynomials
 * over the rationals.
 *
 * BigRational is kept in canonical form (reduced, positive denominator) after
 * every operation, so two values are equal iff their representations are.
 * RationalPoly stores coefficients by ascending power with trailing zeros
 * stripped; the zero polynomial has no coefficients and degree -1.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den == 0.
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
    /// Non-reduced input is accepted and canonicalized. Throws
    /// std::invalid_argument on malformed text.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    /// Throws std::domain_error on division by zero.
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& x);

/// C(n, k) by the multiplicative formula; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// n! as an exact integer.
BigInt factorial(std::uint64_t n);

class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRational> coefficients);
    RationalPoly(std::initializer_list<BigRational> coefficients);

    static RationalPoly constant(const BigRational& c);
    /// c * x^power
    static RationalPoly monomial(const BigRational& c, std::size_t power);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const BigRational> coefficients() const { return coeffs_; }
    /// Coefficient of x^power; zero past the degree.
    BigRational coeff(std::size_t power) const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const BigRational& scalar);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const BigRational& c) { return a *= c; }
    friend RationalPoly operator*(const BigRational& c, RationalPoly a) { return a *= c; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    /// Human-readable form with descending powers, e.g. "a^2 - a + 1/6".
    std::string str(std::string_view var = "a") const;

private:
    void strip();

    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q);

/// Exact value of the integral of p over [0, 1].
BigRational poly_integrate_01(const RationalPoly& p);

/// Antiderivative with zero constant term.
RationalPoly poly_antiderivative(const RationalPoly& p);

/// p(x + 1).
RationalPoly poly_shift(const RationalPoly& p);

/// p(x - 1); inverse of poly_shift.
RationalPoly poly_shift_inverse(const RationalPoly& p);

/// Horner evaluation.
BigRational poly_eval(const RationalPoly& p, const BigRational& x);

/// Horner evaluation in double precision.
double poly_eval(const RationalPoly& p, double x);

}  // namespace mzv
