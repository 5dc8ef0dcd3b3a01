#include <catch2/catch_amalgamated.hpp>

#include "schemebounds/rational.hpp"

using namespace schemebounds;

TEST_CASE("parse_rational accepts canonical forms") {
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("17") == 17);
    CHECK(parse_rational("-6") == -6);
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-27/2") == Rational(-27, 2));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects everything outside the grammar") {
    const char* bad[] = {
        "",     "-",    "2/4",  "3/0",  "5/1",   "-0",   "01",   "1/02",  "+3",
        "1/-2", "1.5",  " 1",   "1 ",   "3//4",  "a",    "4/a",  "-",     "--2",
    };
    for (const char* s : bad) {
        INFO(s);
        CHECK_THROWS_AS(parse_rational(s), rational_parse_error);
    }
}

TEST_CASE("to_string emits what parse_rational reads") {
    for (const char* s : {"0", "-5", "3/4", "-27/2", "1", "1000000000000000000000"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-4, 8)) == "-1/2");
}

TEST_CASE("parse_integer rejects proper fractions") {
    CHECK(parse_integer("12") == 12);
    CHECK(parse_integer("-3") == -3);
    CHECK_THROWS_AS(parse_integer("1/2"), rational_parse_error);
    CHECK_THROWS_AS(parse_integer("x"), rational_parse_error);
}

TEST_CASE("floor_to_integer rounds toward minus infinity") {
    CHECK(floor_to_integer(Rational(7)) == 7);
    CHECK(floor_to_integer(Rational(27, 2)) == 13);
    CHECK(floor_to_integer(Rational(-27, 2)) == -14);
    CHECK(floor_to_integer(Rational(-6)) == -6);
    CHECK(floor_to_integer(Rational(0)) == 0);
    CHECK(floor_to_integer(Rational(-1, 1000)) == -1);
}

TEST_CASE("sign and compare agree with the order") {
    CHECK(sign(Rational(-3, 7)) == -1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(sign(Rational(5)) == 1);
    CHECK(compare(Rational(1, 3), Rational(1, 2)) == std::strong_ordering::less);
    CHECK(compare(Rational(2, 4), Rational(1, 2)) == std::strong_ordering::equal);
    CHECK(compare(Rational(5), Rational(-5)) == std::strong_ordering::greater);
}

TEST_CASE("pow2 is exact at large exponents") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(31) == Integer("2147483648"));
    CHECK(pow2(100) == Integer("1267650600228229401496703205376"));
}

TEST_CASE("is_integer tracks the reduced denominator") {
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(5, 3)));
}
