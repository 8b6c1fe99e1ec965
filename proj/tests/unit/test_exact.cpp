#include <doctest.h>

#include "momentforge/exact.hpp"

using namespace momentforge;

TEST_SUITE("exact") {
  TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("parse_rational round-trips the printed form") {
    for (const char* text : {"0", "-7", "3/4", "-123456789012345678901234567891/11"})
      CHECK(to_string(parse_rational(text)) == text);
    CHECK(parse_rational(" 10/4 ") == Rational(5, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
  }

  TEST_CASE("factorial, powers and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(ipow(Integer(2), 100) == Integer("1267650600228229401496703205376"));
    CHECK(ipow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 4) == 1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK_THROWS_AS(binomial(5, -1), std::invalid_argument);
    CHECK(falling_factorial(Rational(5), 3) == 60);
    CHECK(falling_factorial(Rational(5), 0) == 1);
  }

  TEST_CASE("Stirling numbers: small table and row sums") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling1_signed(4, 2) == 11);
    CHECK(stirling1_signed(4, 3) == -6);
    // Bell numbers and sum |s(n,k)| = n!
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned n = 0; n < 9; ++n) {
      Integer b = 0, f = 0;
      for (unsigned k = 0; k <= n; ++k) {
        b += stirling2(n, k);
        f += abs(stirling1_signed(n, k));
      }
      CHECK(b == bell[n]);
      CHECK(f == factorial(n));
    }
  }

  TEST_CASE("falling factorial expands through signed Stirling numbers") {
    for (unsigned j = 0; j <= 12; ++j) {
      for (long x = -3; x <= 7; ++x) {
        Rational acc = 0;
        for (unsigned k = 0; k <= j; ++k) acc += Rational(stirling1_signed(j, k)) * ipow(Rational(x), k);
        CHECK(acc == falling_factorial(Rational(x), j));
      }
    }
  }
}
