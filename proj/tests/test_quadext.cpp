#include "doctest.h"
#include "frb/quadext.hpp"

using namespace frb;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7/12") == Rational(7, 12));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("field arithmetic in Q(sqrt(3))") {
    QuadExt x(Rational(1, 2), Rational(1, 3), 3);
    QuadExt y(Rational(-2), Rational(1), 3);

    CHECK(x + y == QuadExt(Rational(-3, 2), Rational(4, 3), 3));
    CHECK(x * y == QuadExt(Rational(0), Rational(-1, 6), 3));
    CHECK(x - x == QuadExt(0));
    CHECK(x * x.inverse() == QuadExt(1));
    CHECK((x / y) * y == x);
}

TEST_CASE("mixed radicands are rejected, rationals mix freely") {
    QuadExt r3(Rational(1), Rational(1), 3);
    QuadExt r5(Rational(1), Rational(1), 5);
    QuadExt plain(Rational(2, 7));
    CHECK_THROWS_AS(r3 + r5, std::invalid_argument);
    CHECK(r3 * plain == QuadExt(Rational(2, 7), Rational(2, 7), 3));
}

TEST_CASE("perfect-square radicand folds into the rational part") {
    QuadExt folded(Rational(0), Rational(1), 4);
    CHECK(folded == QuadExt(2));
    CHECK(folded.b == 0);
}

TEST_CASE("sign tests are exact near a close rational") {
    // 4*sqrt(3) vs 7: 48 < 49, so the difference is negative.
    QuadExt d(Rational(-7), Rational(4), 3);
    CHECK(d.sign() < 0);
    // 7*sqrt(3) vs 12: 147 > 144.
    CHECK(QuadExt(Rational(-12), Rational(7), 3).sign() > 0);
}

TEST_CASE("half powers of q") {
    CHECK(half_power(3, 2) == QuadExt(3));
    CHECK(half_power(3, 0) == QuadExt(1));
    CHECK(half_power(3, 1) == QuadExt(Rational(0), Rational(1), 3));
    CHECK(half_power(3, -1) == QuadExt(Rational(0), Rational(1, 3), 3));
    CHECK(half_power(3, 5) * half_power(3, -5) == QuadExt(1));
    CHECK(half_power(5, -4) == QuadExt(Rational(1, 25)));
}

TEST_CASE("string form round trips through the reader") {
    QuadExt x(Rational(1, 2), Rational(-5, 3), 3);
    CHECK(x.str() == "1/2 - 5/3*sqrt(3)");
    CHECK(QuadExt(Rational(2, 3)).str() == "2/3");
    CHECK(QuadExt(Rational(0), Rational(1, 12), 3).str() == "1/12*sqrt(3)");
}
