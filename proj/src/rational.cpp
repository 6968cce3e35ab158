#include "rdelab/rational.hpp"

#include <cctype>
#include <ostream>

#include "rdelab/errors.hpp"

namespace rdelab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class from_int64(std::int64_t v) {
    // mpz_class has no portable int64 constructor on every platform.
    mpz_class z;
    const bool negative = v < 0;
    const auto magnitude = negative ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(magnitude), 0, 0, &magnitude);
    if (negative) z = -z;
    return z;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    value_ = mpq_class(from_int64(value));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(from_int64(numerator), from_int64(denominator));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    return value_.get_str(10);
}

std::string Rational::numerator_string() const {
    return value_.get_num().get_str(10);
}

std::string Rational::denominator_string() const {
    return value_.get_den().get_str(10);
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpz_class num = abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;

    std::string magnitude = q.get_str(10);
    if (digits > 0) {
        if (magnitude.size() <= static_cast<std::size_t>(digits)) {
            magnitude.insert(0, static_cast<std::size_t>(digits) + 1 - magnitude.size(), '0');
        }
        magnitude.insert(magnitude.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    const bool negative = sign() < 0 && q != 0;
    return negative ? "-" + magnitude : magnitude;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class q;
    mpq_inv(q.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(q));
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpq_class q;
    mpz_pow_ui(q.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(q.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of a reduced fraction stay reduced with a positive denominator.
    return Rational(std::move(q));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw DivisionByZero();
    value_ /= other.value_;
    return *this;
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace rdelab
