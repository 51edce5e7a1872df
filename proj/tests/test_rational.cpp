#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvwb/rational.hpp"

using curvwb::Rational;

TEST_CASE("arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a + b).str() == "1/2");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(-4, 6).denominator() == 3);
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK((Rational(1, 3) * Rational(3)) == Rational(1));
  CHECK((Rational(7, 2) / Rational(7)) == Rational(1, 2));
}

TEST_CASE("parse accepts p, -p, p/q and nothing else") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse(""), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("+5"), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse(" 1"), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("1 "), curvwb::input_error);
  CHECK_THROWS_AS(Rational::parse("a"), curvwb::input_error);
}

TEST_CASE("parse(format(x)) round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 99991);
  for (int t = 0; t < 2000; ++t) {
    Rational x(num(rng), den(rng));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("stored form is reduced with positive denominator") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int t = 0; t < 500; ++t) {
    Rational x(num(rng), den(rng));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(abs(x.numerator())).get_mpz_t(),
            x.denominator().get_mpz_t());
    CHECK(x.denominator() > 0);
    CHECK((x.numerator() == 0 || g == 1));
  }
}

TEST_CASE("big values do not overflow") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000000);
  Rational y = x + Rational(1, 3);
  CHECK(y - x == Rational(1, 3));
}
