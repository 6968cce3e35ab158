#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rdelab {

/**
 * Exact rational number in canonical form (positive denominator, reduced).
 *
 * Backed by GMP's mpq_class. Every constructor and arithmetic operator leaves
 * the value canonical; division by zero throws DivisionByZero instead of
 * producing a value.
 *
 * Text form: "p" or "p/q" with an optional leading '-', q > 0.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "p" or "p/q"; non-reduced input such as "6/4" is accepted and reduced.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    std::string numerator_string() const;
    std::string denominator_string() const;

    /// Decimal rendering rounded half away from zero to `digits` fractional places.
    std::string to_decimal(int digits) const;
    double to_double() const { return value_.get_d(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational inverse() const;
    /// Integer power; negative exponents invert (zero base with a negative exponent throws).
    Rational pow(std::int64_t exponent) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Size of the value in bits (numerator plus denominator), for diagnostics.
    std::size_t bit_size() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace rdelab
