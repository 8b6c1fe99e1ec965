#include <doctest.h>

#include "momentforge/polynomial.hpp"
#include "momentforge/quasi_polynomial.hpp"

using namespace momentforge;

namespace {
Polynomial n_var() { return Polynomial::variable("n"); }
}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("ring operations and canonical text") {
    const Polynomial n = n_var();
    const Polynomial p = n * n * Rational(3, 2) - n + Rational(1);
    CHECK(p.to_string() == "3/2*n^2 - n + 1");
    CHECK(p.degree() == 2);
    CHECK(p.eval(2) == 5);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == Polynomial::kZeroDegree);
    CHECK(parse_polynomial(p.to_string(), "n") == p);
    CHECK(Polynomial(Rational(0)).to_string() == "0");
  }

  TEST_CASE("symbol mismatch is rejected") {
    CHECK_THROWS_AS(n_var() + Polynomial::variable("W"), std::invalid_argument);
    CHECK_NOTHROW(n_var() + Polynomial(Rational(3)));
  }

  TEST_CASE("division") {
    const Polynomial n = n_var();
    const Polynomial a = (n - Rational(1)) * (n + Rational(2));
    CHECK(exact_div(a, n - Rational(1)) == n + Rational(2));
    auto [q, r] = divmod(a + Rational(5), n - Rational(1));
    CHECK(q == n + Rational(2));
    CHECK(r == Polynomial(Rational(5)));
    CHECK_THROWS_AS(exact_div(a + Rational(1), n), std::domain_error);
    CHECK_THROWS_AS(divmod(a, Polynomial()), std::domain_error);
  }

  TEST_CASE("compose, derivative and scale") {
    const Polynomial n = n_var();
    const Polynomial p = n * n + Rational(1);
    CHECK(p.compose(n + Rational(1)) == n * n + n * Rational(2) + Rational(2));
    CHECK(p.derivative() == n * Rational(2));
    CHECK(p.scale_argument(3) == n * n * Rational(9) + Rational(1));
    CHECK(p.leading_term().first == 2);
  }

  TEST_CASE("bivariate tower evaluates from the outside in") {
    const BiPolynomial W = BiPolynomial::variable("W");
    const BiPolynomial form = W * BiPolynomial(n_var());  // n*W
    const Polynomial at_w4 = form.eval(4);
    CHECK(at_w4.eval(3) == 12);
    CHECK(form.to_string().find("W") != std::string::npos);
  }

  TEST_CASE("quasi-polynomial branches and canonical period") {
    const Polynomial n = n_var();
    QuasiPolynomial q({n, n + Rational(1), n, n + Rational(1)});
    CHECK(q.period() == 4);
    CHECK(q.canonical().period() == 2);
    CHECK(q.eval(5) == 6);
    CHECK(q.eval(6) == 6);
    CHECK_THROWS(q.eval(-1));
    CHECK(QuasiPolynomial({n, n}).canonical().period() == 1);
  }
}
