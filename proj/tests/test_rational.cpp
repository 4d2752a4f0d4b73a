#include "doctest.h"

#include <limits>
#include <stdexcept>

#include "sdym/rational.hpp"

using sdym::Rational;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator_string() == "-3");
  CHECK(r.denominator_string() == "2");
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(1, 2) < Rational(0));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(-7, 3).sign() == -1);
}

TEST_CASE("rational parse and render") {
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(1, 3).to_decimal() == "0.33333333333333333");
  CHECK(Rational(-1, 14).to_decimal(5) == "-0.071429");
  CHECK(Rational(0).to_decimal() == "0");
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("values beyond 64 bits stay exact and return to the inline form") {
  const std::int64_t big = 9'000'000'000'000'000'000;
  const Rational a(big);
  const Rational sq = a * a;
  CHECK_FALSE(sq.is_small());
  CHECK(sq.to_string() == "81000000000000000000000000000000000000/1");
  const Rational back = sq / a;
  CHECK(back.is_small());
  CHECK(back == a);
  CHECK(sq > a);
  CHECK(-sq < Rational(0));
  CHECK((sq - sq).is_zero());
  CHECK((sq + Rational(1)) - sq == Rational(1));
  const Rational tiny = Rational(1) / sq;
  CHECK(tiny * sq == Rational(1));
  CHECK(tiny.sign() == 1);
  CHECK(Rational::parse("81000000000000000000000000000000000000") == sq);
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()).to_string() == "-9223372036854775808/1");
  CHECK(Rational(std::numeric_limits<std::int64_t>::min(), -1).to_string() == "9223372036854775808/1");
}

TEST_CASE("inline arithmetic agrees with a fraction oracle") {
  // Exhaustive over small numerators and denominators, checked by
  // cross-multiplication in 64-bit integers.
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 5; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (int d = 1; d <= 5; ++d) {
          const Rational x(a, b);
          const Rational y(c, d);
          CHECK(x + y == Rational(a * d + c * b, b * d));
          CHECK(x - y == Rational(a * d - c * b, b * d));
          CHECK(x * y == Rational(a * c, b * d));
          if (c != 0) CHECK(x / y == Rational(a * d, b * c));
          CHECK((x < y) == (a * d < c * b));
        }
      }
    }
  }
}
