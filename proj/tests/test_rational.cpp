#include <boost/multiprecision/cpp_int.hpp>

#include "ccps/rational.hpp"
#include "ccps/toolkit.hpp"
#include "doctest.h"

using ccps::Rational;
using BigRat = boost::multiprecision::cpp_rational;

TEST_CASE("construction normalizes to lowest terms") {
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts num/den and plain integers") {
    CHECK(Rational::parse("4/7") == Rational(4, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("10/5") == Rational(2));
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(999999, 1000000) < Rational(1));
    // the classic double trap: 0.1 + 0.2 != 0.3, but rationals are exact
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("arithmetic matches a big-integer reference") {
    ccps::Rng rng(20240901);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a(rng.uniform_int(-50, 50), rng.uniform_int(1, 999983));
        Rational b(rng.uniform_int(-50, 50), rng.uniform_int(1, 999983));
        BigRat ra(a.num(), a.den()), rb(b.num(), b.den());
        auto same = [](const Rational& x, const BigRat& y) {
            return BigRat(x.num(), x.den()) == y;
        };
        CHECK(same(a + b, ra + rb));
        CHECK(same(a - b, ra - rb));
        CHECK(same(a * b, ra * rb));
        if (b != Rational(0)) CHECK(same(a / b, ra / rb));
        CHECK((a < b) == (ra < rb));
    }
}

TEST_CASE("running sums with a shared denominator stay exact") {
    Rational acc(0);
    for (int i = 0; i < 3000; ++i) acc += Rational(1, 3000);
    CHECK(acc == Rational(1));
}

TEST_CASE("overflow throws instead of silently degrading") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(1000), ccps::RationalOverflow);
}
