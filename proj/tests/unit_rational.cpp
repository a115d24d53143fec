#include <doctest.h>

#include "recipstab/rational.hpp"

using namespace recipstab;

TEST_CASE("floor and ceil round toward the correct infinities") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(floor_rational(Rational(6)) == 6);
    CHECK(ceil_rational(Rational(7, 2)) == 4);
    CHECK(ceil_rational(Rational(-7, 2)) == -3);
    CHECK(ceil_rational(Rational(-6)) == -6);
}

TEST_CASE("pow_int handles signs and inversion") {
    CHECK(pow_int(Rational(4, 3), -9) == Rational(19683, 262144));
    CHECK(pow_int(Rational(-59, 39), 9) ==
          Rational(Integer("-8662995818654939"), Integer("208728361158759")));
    // Odd negative powers of negative bases keep the denominator positive.
    const Rational v = pow_int(Rational(-59, 39), -9);
    CHECK(v == Rational(1) / pow_int(Rational(-59, 39), 9));
    CHECK(denominator(v) > 0);
    CHECK(pow_int(Rational(5), 0) == 1);
    CHECK(pow_int(Rational(0), 7) == 0);
    CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);
}

TEST_CASE("pow_uint is plain binary exponentiation") {
    CHECK(pow_uint(Integer(4), 9) == 262144);
    CHECK(pow_uint(Integer(3), 9) == 19683);
    CHECK(pow_uint(Integer(3), 10) == 59049);
    CHECK(pow_uint(Integer(-2), 5) == -32);
    CHECK(pow_uint(Integer(17), 0) == 1);
}

TEST_CASE("iroot_floor is the exact integer root floor") {
    CHECK(iroot_floor(Integer(0), 3) == 0);
    CHECK(iroot_floor(Integer(262143), 9) == 3);
    CHECK(iroot_floor(Integer(262144), 9) == 4);
    CHECK(iroot_floor(Integer(262145), 9) == 4);
    // Property: r^n <= m < (r+1)^n on a deterministic sweep.
    for (int m = 0; m < 2000; ++m) {
        for (unsigned n : {2u, 3u, 5u, 9u}) {
            const Integer r = iroot_floor(Integer(m), n);
            CHECK(pow_uint(r, n) <= m);
            CHECK(pow_uint(r + 1, n) > m);
        }
    }
}

TEST_CASE("exact_pow integer exponents defer to pow_int") {
    CHECK(exact_pow(Rational(2, 3), Rational(3)) == Rational(8, 27));
    CHECK(exact_pow(Rational(2, 3), Rational(-3)) == Rational(27, 8));
}

TEST_CASE("exact_pow fractional exponents demand perfect powers") {
    CHECK(exact_pow(Rational(8, 27), Rational(1, 3)) == Rational(2, 3));
    CHECK(exact_pow(Rational(512), Rational(2, 9)) == 4);
    CHECK(exact_pow(Rational(1, 19683), Rational(2, 9)) == Rational(1, 9));
    CHECK(exact_pow(Rational(1), Rational(1, 2)) == 1);
    CHECK(exact_pow(Rational(0), Rational(1, 2)) == 0);
    CHECK_THROWS_AS(exact_pow(Rational(3), Rational(1, 2)), InexactPowerError);
    CHECK_THROWS_AS(exact_pow(Rational(-8), Rational(1, 3)), InexactPowerError);
    CHECK_THROWS_AS(exact_pow(Rational(0), Rational(-1, 2)), std::domain_error);
}

TEST_CASE("parse and format round-trip") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("+6/8") == Rational(3, 4));
    CHECK(parse_rational("3/-4") == Rational(-3, 4));
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5/1");
    CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/ 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
