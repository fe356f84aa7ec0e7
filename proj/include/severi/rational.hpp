#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace severi {

using BigInt = mpz_class;

/// Exact signed rational in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that the
/// public API never exposes expression templates and so that the canonical
/// "p/q" text form lives in one place.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Returns the numerator when the value is integral; throws std::domain_error otherwise.
    BigInt to_integer() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Adds a*b into this value without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace severi
