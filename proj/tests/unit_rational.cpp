#include "doctest.h"

#include "padic/rational.hpp"

using namespace padic;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("denominator in the 1/d sense") {
    CHECK(Rational(3, 4).denom() == 4);
    CHECK(Rational(2).denom() == 1);
    CHECK(Rational(0).denom() == 1);
    CHECK(Rational(6, 4).denom() == 2);
}

TEST_CASE("string round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4).str() == "4");
}

TEST_CASE("valuation ordering with infinity") {
    Valuation inf = Valuation::infinity();
    Valuation two{Rational(2)};
    CHECK(two < inf);
    CHECK(inf >= two);
    CHECK(inf == Valuation::infinity());
    CHECK(!(inf < inf));
}
