#include <doctest.h>

#include "wrm/rational.hpp"
#include "wrm/rng.hpp"

using wrm::binomial;
using wrm::Integer;
using wrm::Rational;

TEST_SUITE("rational") {
  TEST_CASE("binomial boundary and frozen values") {
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(64, 32) == Integer("1832624140942590534"));
  }

  TEST_CASE("binomial matches an additively built Pascal table") {
    // Oracle: the table built purely by additions.
    constexpr unsigned long kMax = 64;
    std::vector<std::vector<Integer>> table(kMax + 1);
    for (unsigned long i = 0; i <= kMax; ++i) {
      table[i].assign(i + 2, Integer(0));
      table[i][0] = 1;
      for (unsigned long k = 1; k <= i; ++k) table[i][k] = table[i - 1][k - 1] + table[i - 1][k];
    }
    for (unsigned long i = 0; i <= kMax; ++i)
      for (unsigned long k = 0; k <= i; ++k) REQUIRE(binomial(i, k) == table[i][k]);
  }

  TEST_CASE("pow keeps the 0^0 = 1 convention") {
    CHECK(pow(Rational(0), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(-2), 3) == Rational(-8));
    CHECK(pow(Rational(0), 5) == Rational(0));
    CHECK(pow(Rational(7, 2), 1) == Rational(7, 2));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
  }

  TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("arithmetic and comparisons") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a > b);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  }

  TEST_CASE("field axioms on random triples") {
    wrm::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      const Rational a = rng.rational(50, 20), b = rng.rational(50, 20), c = rng.rational(50, 20);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) REQUIRE(a * (Rational(1) / a) == Rational(1));
    }
  }

  TEST_CASE("text format") {
    CHECK(Rational::parse("-3/7").str() == "-3/7");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("4/6") == Rational(2, 3));  // canonicalized on input
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-4).str() == "-4");

    for (const char* bad : {"", "1/0", "1/-2", "3.5", "x", "1/", "/2", "+1", "2/3/4", "1 /2"})
      CHECK_THROWS_AS(Rational::parse(bad), wrm::parse_error);
  }

  TEST_CASE("parse/format round trip on random values") {
    wrm::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const Rational r = rng.rational(1000, 999);
      REQUIRE(Rational::parse(r.str()) == r);
    }
  }
}
