#include "doctest.h"
#include "qh/rational.hpp"

using qh::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(10, 2).str() == "5");
}

TEST_CASE("zero denominators are construction-time errors") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  Rational a(5, 2), b(7, 3);
  CHECK((a + b) == Rational(29, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(35, 6));
  CHECK((a / b) == Rational(15, 14));
  CHECK((-a) == Rational(-5, 2));
  CHECK(a.abs() == a);
  CHECK((-a).abs() == a);
}

TEST_CASE("normalization invariant holds after arithmetic chains") {
  Rational x(1, 3);
  for (int i = 2; i < 40; ++i) x = x * Rational(i, i + 1) + Rational(1, i);
  CHECK(qh::gcd(x.num(), x.den()) == 1);
  CHECK(x.den() > 0);
}

TEST_CASE("parsing accepts a, -a, a/b") {
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("-1") == Rational(-1));
  CHECK(Rational::parse(" 10/3 ") == Rational(10, 3));
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
}
