#include <doctest.h>

#include <stdexcept>

#include "cohsys/rational.hpp"

using cohsys::Integer;
using cohsys::Rational;
using cohsys::compare_rationals;
using cohsys::make_rational;

namespace {

bool canonical(const Rational& r) {
    return r.denominator() > 0 && cohsys::gcd(r.numerator() < 0 ? Integer(-r.numerator()) : r.numerator(),
                                              r.denominator()) == 1;
}

}  // namespace

TEST_CASE("make_rational reduces and normalises sign") {
    const Rational a = make_rational(3, 6);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    const Rational b = make_rational(-4, -2);
    CHECK(b.numerator() == 2);
    CHECK(b.denominator() == 1);
    const Rational c = make_rational(0, 7);
    CHECK(c.numerator() == 0);
    CHECK(c.denominator() == 1);
    const Rational e = make_rational(5, -15);
    CHECK(e.numerator() == -1);
    CHECK(e.denominator() == 3);
}

TEST_CASE("make_rational rejects a zero denominator") {
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("compare_rationals is the real order") {
    CHECK(compare_rationals(make_rational(1, 3), make_rational(1, 2)) == std::strong_ordering::less);
    CHECK(compare_rationals(make_rational(5, 10), make_rational(1, 2)) == std::strong_ordering::equal);
    CHECK(compare_rationals(make_rational(-1, 2), make_rational(-2, 3)) == std::strong_ordering::greater);
}

TEST_CASE("arithmetic stays exact and canonical") {
    for (int p = -7; p <= 7; ++p)
        for (int q = 1; q <= 6; ++q)
            for (int r = -5; r <= 5; ++r)
                for (int s = 1; s <= 4; ++s) {
                    const Rational a = make_rational(p, q);
                    const Rational b = make_rational(r, s);
                    CHECK((a + b) - b == a);
                    CHECK(canonical(a + b));
                    CHECK(canonical(a - b));
                    CHECK(canonical(a * b));
                    if (!b.is_zero()) {
                        CHECK(canonical(a / b));
                        CHECK((a / b) * b == a);
                    }
                }
}

TEST_CASE("floor, ceil and rendering") {
    CHECK(make_rational(7, 2).floor() == 3);
    CHECK(make_rational(7, 2).ceil() == 4);
    CHECK(make_rational(-7, 2).floor() == -4);
    CHECK(make_rational(-7, 2).ceil() == -3);
    CHECK(make_rational(6, 3).floor() == 2);
    CHECK(make_rational(6, 3).ceil() == 2);
    CHECK(make_rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(5).to_string() == "5");
    CHECK(make_rational(4, 2).is_integer());
}

TEST_CASE("big values do not overflow") {
    const Integer big = Integer(1) << 200;
    const Rational a(big, big * 3);
    CHECK(a == make_rational(1, 3));
    const Rational b(big + 1, Integer(2));
    CHECK(b > Rational(big / 2));
}
