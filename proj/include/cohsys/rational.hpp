#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohsys {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1. Immutable once built.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design of integer promotion
    Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT

    /// Throws std::domain_error when den == 0.
    Rational(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    Integer floor() const;
    Integer ceil() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Canonical {};
    Rational(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_;
    Integer den_;
};

/// Builds p/q in canonical form; throws std::domain_error when q == 0.
Rational make_rational(const Integer& p, const Integer& q);

std::strong_ordering compare_rationals(const Rational& a, const Rational& b);

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& value);

}  // namespace cohsys
