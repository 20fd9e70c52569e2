#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/rational.hpp"

using namespace fairdiv;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("2.") == Rational(2));
    CHECK(parse_rational(" 10/3 ") == Rational(10, 3));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects junk") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("."), ParseError);
    CHECK_THROWS_AS(parse_rational("--1"), ParseError);
}

TEST_CASE("fraction rendering is canonical") {
    CHECK(to_fraction_string(Rational(3, 4)) == "3/4");
    CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
    CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_fraction_string(Rational(5)) == "5");
    CHECK(to_fraction_string(Rational(0)) == "0");
}

TEST_CASE("decimal rendering rounds and trims") {
    CHECK(to_decimal_string(Rational(1, 2)) == "0.5");
    CHECK(to_decimal_string(Rational(1, 8)) == "0.125");
    CHECK(to_decimal_string(Rational(5)) == "5");
    CHECK(to_decimal_string(Rational(-3, 2)) == "-1.5");
    CHECK(to_decimal_string(Rational(1, 3)) == "0.333333");
    CHECK(to_decimal_string(Rational(2, 3)) == "0.666667");
    CHECK(to_decimal_string(Rational(1, 3), 2) == "0.33");
    CHECK(to_decimal_string(Rational(0)) == "0");
    // round half away from zero at the digit budget
    CHECK(to_decimal_string(Rational(1, 2), 0) == "1");
    CHECK(to_decimal_string(Rational(-1, 1000), 2) == "0");
}

TEST_CASE("round trip through the fraction form") {
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 9; ++den) {
            Rational value(num, den);
            value.canonicalize();
            CHECK(parse_rational(to_fraction_string(value)) == value);
        }
}
