#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "chainconic/rational.hpp"

using chainconic::Rational;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-9, -3) == Rational(3));
  CHECK((Rational(1, 6) + Rational(1, 3)).str() == "1/2");
}

TEST_CASE("parse accepts integers and p/q only") {
  CHECK(Rational::parse("21/5") == Rational(21, 5));
  CHECK(Rational::parse("-8/6") == Rational(-4, 3));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
}

TEST_CASE("arithmetic, ordering and conversion") {
  const Rational a(2, 3), b(-5, 7);
  CHECK(a * b == Rational(-10, 21));
  CHECK(a / b == Rational(-14, 15));
  CHECK(a - b == Rational(29, 21));
  CHECK(b < a);
  CHECK(-b == Rational(5, 7));
  CHECK(abs(b) == Rational(5, 7));
  CHECK(a.to_double() == doctest::Approx(2.0 / 3.0));
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(std::int64_t{-9223372036854775807LL} - 1).str() == "-9223372036854775808");
  std::ostringstream os;
  os << b;
  CHECK(os.str() == "-5/7");
}
