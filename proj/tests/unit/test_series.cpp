#include <doctest.h>

#include "momentforge/series.hpp"

using namespace momentforge;

namespace {
TruncatedSeries<Rational> from_list(std::vector<Rational> c, int order) { return TruncatedSeries<Rational>(c, order); }
}  // namespace

TEST_SUITE("series") {
  TEST_CASE("truncated product and quotient") {
    const auto a = from_list({1, 1}, 4);   // 1 + z
    const auto b = from_list({1, -1}, 4);  // 1 - z
    const auto prod = a * b;
    CHECK(prod[0] == 1);
    CHECK(prod[2] == -1);
    CHECK(prod[3] == 0);
    const auto geo = TruncatedSeries<Rational>::one(4) / b;  // 1/(1-z)
    for (int i = 0; i <= 4; ++i) CHECK(geo[i] == 1);
    CHECK_THROWS_AS(a / from_list({0, 1}, 4), std::domain_error);
    CHECK_THROWS_AS(a + from_list({1}, 3), std::invalid_argument);
  }

  TEST_CASE("exp of z is the factorial series") {
    const auto e = exp_series(from_list({0, 1}, 8));
    for (int i = 0; i <= 8; ++i) CHECK(e[i] == Rational(1) / Rational(factorial(i)));
    CHECK_THROWS(exp_series(from_list({1, 1}, 3)));
    CHECK_THROWS(log_series(from_list({2, 1}, 3)));
  }

  TEST_CASE("log(1+z) alternates") {
    const auto l = log_series(from_list({1, 1}, 7));
    CHECK(l[0] == 0);
    for (int i = 1; i <= 7; ++i) CHECK(l[i] == Rational(i % 2 ? 1 : -1, i));
  }

  TEST_CASE("generalized binomial series") {
    const auto half = generalized_binomial_series(Rational(1, 2), 4);
    CHECK(half[0] == 1);
    CHECK(half[1] == Rational(1, 2));
    CHECK(half[2] == Rational(-1, 8));
    CHECK(half[3] == Rational(1, 16));
    // (1+z)^alpha symbolic, then alpha = 3 gives the polynomial (1+z)^3.
    const auto sym = generalized_binomial_series(Polynomial::variable("a"), 5);
    for (int i = 0; i <= 5; ++i) CHECK(sym[i].eval(3) == binomial(3, i));
  }

  TEST_CASE("polynomial coefficients lift and print") {
    const auto lifted = lift(from_list({1, 2}, 2), "n");
    CHECK(lifted[1] == Polynomial(Rational(2)));
    CHECK(to_string(from_list({1, 0, Rational(1, 8)}, 2)) == "1 + 1/8*z^2");
  }
}
