#include <doctest.h>

#include "rieszlab/rational.hpp"

using rieszlab::Rational;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(4, -8) == Rational(-1, 2));
}

TEST_CASE("rational ordering and mod") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).mod(1) == Rational(1, 2));
    CHECK(Rational(7, 2).mod(2) == Rational(3, 2));
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(7, 3).floor() == 2);
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("3/5") == Rational(3, 5));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational(22, 7).to_string() == "22/7");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse(Rational(-13, 64).to_string()) == Rational(-13, 64));
    CHECK_THROWS_AS(Rational::parse("x/y"), rieszlab::BadDescriptor);
    CHECK_THROWS_AS(Rational(1, 0), rieszlab::InvalidArgument);
}

TEST_CASE("rational overflow is detected") {
    Rational big(1LL << 62);
    CHECK_THROWS_AS(big * big, rieszlab::Overflow);
    Rational half(1LL << 62, 1LL << 62);
    CHECK(half == Rational(1));
}
