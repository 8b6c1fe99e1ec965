#include <doctest.h>

#include "momentforge/moments.hpp"

using namespace momentforge;

namespace {
// Moments of the uniform distribution on {0, 1, 2, 3}.
MomentVector<Rational> uniform4(int r_max) {
  MomentVector<Rational> m;
  for (int r = 0; r <= r_max; ++r) {
    Rational acc = 0;
    for (int v = 0; v < 4; ++v) acc += ipow(Rational(v), r);
    m.entries.push_back(acc / 4);
  }
  return m;
}
}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("binomial moments of a small distribution") {
    const auto b = raw_to_binomial(uniform4(4));
    CHECK(b.kind == MomentKind::Binomial);
    // E[C(X,2)] = (0+0+1+3)/4
    CHECK(b[2] == 1);
    CHECK(b[3] == Rational(1, 4));
    CHECK(b[4] == 0);
    CHECK(binomial_to_raw(b).entries == uniform4(4).entries);
  }

  TEST_CASE("central moments about the mean") {
    const auto raw = uniform4(4);
    const auto c = raw_to_central(raw, raw[1]);
    CHECK(c[1] == 0);
    CHECK(c[2] == Rational(5, 4));
    CHECK(c[3] == 0);
    CHECK(central_to_raw(c, raw[1]).entries == raw.entries);
    CHECK_THROWS(raw_to_central(raw, Rational(7)));
  }

  TEST_CASE("Gaussian targets") {
    CHECK(gaussian_moment(0) == 1);
    CHECK(gaussian_moment(2) == 1);
    CHECK(gaussian_moment(4) == 3);
    CHECK(gaussian_moment(6) == 15);
    CHECK(gaussian_moment(8) == 105);
    CHECK(gaussian_moment(7) == 0);
  }

  TEST_CASE("normalized moments need a variance") {
    MomentVector<Rational> degenerate{MomentKind::Central, {1, 0, 0}, "", {}};
    CHECK_THROWS_AS(normalized_moments(degenerate), std::domain_error);
    CHECK_THROWS_AS(normalized_moments(uniform4(3)), std::invalid_argument);
    MomentVector<Rational> gauss{MomentKind::Central, {1, 0, 4, 0, 48}, "", {}};
    const auto m = normalized_moments(gauss, 30);
    CHECK(m[4] == Real(3));
  }

  TEST_CASE("normality verdicts need a non-increasing tail") {
    const std::vector<std::int64_t> grid{1, 2, 3};
    auto source = [](std::int64_t n, int r_max) {
      // Symmetric +-1 with weight shrinking to a Gaussian-like kurtosis 3 - 2/n.
      MomentVector<Rational> c{MomentKind::Central, {}, "", {}};
      for (int r = 0; r <= r_max; ++r) {
        if (r % 2) c.entries.push_back(0);
        else if (r == 0) c.entries.push_back(1);
        else if (r == 2) c.entries.push_back(1);
        else c.entries.push_back(gaussian_moment(r) - Rational(2, n));
      }
      return c;
    };
    const auto report = normality_report("toy", {}, grid, 4, source, {0.8, 30});
    CHECK(report.rows.size() == 12);
    CHECK(report.verdict(4).converged);
    CHECK(report.verdict(2).converged);
    CHECK_THROWS(normality_report("toy", {}, std::vector<std::int64_t>{1, 2}, 4, source));
  }
}
