#include <doctest.h>

#include <cmath>

#include "momentforge/invmaj.hpp"
#include "momentforge/mgf.hpp"

using namespace momentforge;

TEST_SUITE("mgf") {
  TEST_CASE("grid construction") {
    const auto g = linear_grid(-2, 2, 5);
    REQUIRE(g.size() == 5);
    CHECK(g[0] == -2);
    CHECK(g[2] == 0);
    CHECK(g[4] == 2);
    CHECK_THROWS(linear_grid(0, 1, 0));
  }

  TEST_CASE("t = 0 is exactly one") {
    const double t[] = {0.0};
    const auto r = mgf_limit_check("board1n", 50, t, 30);
    CHECK(r.rows[0].value == Real(1));
    CHECK(r.rows[0].deviation == Real(0));
  }

  TEST_CASE("inversion product equals the PGF evaluated at e^(t/sigma)") {
    const int n = 12;
    const double ts[] = {-1.5, 0.7, 2.0};
    const auto report = mgf_limit_check("invmaj", n, ts, 40);
    PrecisionScope scope(40);
    const Polynomial pgf = invmaj::pgf(n);
    const Real sigma = sqrt(to_real(invmaj::variance().eval(n)));
    const Real mu = to_real(invmaj::mean().eval(n));
    for (std::size_t i = 0; i < 3; ++i) {
      const Real q = exp(Real(ts[i]) / sigma);
      Real acc = 0;
      for (std::size_t d = pgf.coefficients().size(); d-- > 0;) acc = acc * q + to_real(pgf.coefficients()[d]);
      acc /= pow(q, mu);
      CHECK(abs(acc - report.rows[i].value) < Real("1e-30"));
    }
  }

  TEST_CASE("deviations shrink as n grows") {
    const auto grid = linear_grid(-2, 2, 9);
    const auto a = mgf_limit_check("board1n", 100, grid, 30);
    const auto b = mgf_limit_check("board1n", 1000, grid, 30);
    CHECK(b.max_deviation < a.max_deviation);
    CHECK_THROWS(mgf_limit_check("schur", 10, grid));
    CHECK_THROWS(mgf_limit_check("invmaj", 1, grid));
  }
}
