#include "doctest.h"

#include "hyperbridge/error.hpp"
#include "hyperbridge/polynomial.hpp"
#include "hyperbridge/rational.hpp"

using hyperbridge::Error;
using hyperbridge::ErrorKind;
using hyperbridge::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    const Rational r(hyperbridge::Integer(6), hyperbridge::Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK((Rational(1) / 3 + Rational(2) / 3) == Rational(1));
    CHECK((Rational(1) / 3 + Rational(2) / 3).is_integer());
}

TEST_CASE("parse accepts integers and p/q") {
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-10/4") == Rational(-5) / 2);
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), Error);
    }
}

TEST_CASE("division by zero raises DivisionByZero") {
    try {
        (void)(Rational(1) / Rational(0));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("exact square roots") {
    CHECK(hyperbridge::rational_sqrt(Rational(0)) == Rational(0));
    CHECK(hyperbridge::rational_sqrt(Rational(49) / 4) == Rational(7) / 2);
    CHECK_FALSE(hyperbridge::rational_sqrt(Rational(2)).has_value());
    CHECK_FALSE(hyperbridge::rational_sqrt(Rational(-4)).has_value());
    CHECK_FALSE(hyperbridge::rational_sqrt(Rational(4) / 3).has_value());
    for (long n = 0; n < 200; ++n) {
        const auto root = hyperbridge::integer_sqrt(n * n);
        REQUIRE(root.has_value());
        CHECK(*root == n);
        if (n > 1) {
            CHECK_FALSE(hyperbridge::integer_sqrt(n * n + 1).has_value());
        }
    }
}

TEST_CASE("pow and ordering") {
    CHECK(hyperbridge::pow(Rational(-2) / 3, 3) == Rational(-8) / 27);
    CHECK(hyperbridge::pow(Rational(5), 0) == Rational(1));
    CHECK(Rational(-1) / 2 < Rational(1) / 3);
    CHECK((Rational(-7) / 2).abs() == Rational(7) / 2);
}

TEST_CASE("univariate gcd detects shared factors") {
    using hyperbridge::UPoly;
    // (x - 1)^2 (x + 2) and its derivative share (x - 1).
    const UPoly f({Rational(2), Rational(-3), Rational(0), Rational(1)});
    const UPoly g = hyperbridge::gcd(f, f.derivative());
    CHECK(g == UPoly({Rational(-1), Rational(1)}));
    const UPoly h({Rational(1), Rational(0), Rational(1)});
    CHECK(hyperbridge::gcd(h, h.derivative()).degree() == 0);
    const auto dm = f.divmod(UPoly({Rational(-1), Rational(1)}));
    CHECK(dm.remainder.is_zero());
    CHECK(dm.quotient * UPoly({Rational(-1), Rational(1)}) == f);
}
