#include <stdexcept>

#include "doctest.h"
#include "ramsey/rational.hpp"

using ramsey::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).str() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact across magnitudes") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 5) <= Rational(7, 5));
  CHECK(Rational(35, 9) > Rational(60, 17));
  // products near the int64 edge go through wide arithmetic
  const Rational big1(3'000'000'000LL, 2'999'999'999LL);
  const Rational big2(3'000'000'001LL, 3'000'000'000LL);
  CHECK(big2 < big1);
}

TEST_CASE("arithmetic stays exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(3, 5).inverse() == Rational(5, 3));
  CHECK(Rational(-3, 5).inverse() == Rational(-5, 3));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK(Rational(-1) * Rational(20, 7).inverse() == Rational(-7, 20));
}

TEST_CASE("overflow is detected, not wrapped") {
  const Rational huge(std::int64_t{1} << 62, 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
}

TEST_CASE("rendering always spells the denominator") {
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational(-7, 20).str() == "-7/20");
  CHECK(Rational(4, 8).str() == "1/2");
}

TEST_CASE("parsing accepts p/q and bare integers") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-7/20") == Rational(-7, 20));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}
