#include "cohsys/rational.hpp"

#include <stdexcept>
#include <utility>

namespace cohsys {

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a);
    Integer y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::string to_string(const Integer& value) { return value.str(); }

Rational::Rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    Integer g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational make_rational(const Integer& p, const Integer& q) { return Rational(p, q); }

Integer Rational::floor() const {
    // C++ division truncates toward zero.
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

Integer Rational::ceil() const {
    Integer q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) {
        q += 1;
    }
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational: division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_rationals(const Rational& a, const Rational& b) { return a <=> b; }

}  // namespace cohsys
