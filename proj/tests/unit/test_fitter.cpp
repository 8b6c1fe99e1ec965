#include <doctest.h>

#include "momentforge/errors.hpp"
#include "momentforge/fitter.hpp"

using namespace momentforge;

namespace {
std::vector<FitSample> sample(long from, long to, const std::function<Rational(long)>& f) {
  std::vector<FitSample> out;
  for (long n = from; n <= to; ++n) out.push_back({n, f(n)});
  return out;
}
}  // namespace

TEST_SUITE("fitter") {
  TEST_CASE("recovers a period-2 quasi-polynomial") {
    FitSpec spec{2, 2, sample(1, 20, [](long n) { return n % 2 ? make_rational(n * n - 1, 4) : make_rational(n * n, 4); }), 3};
    const auto fit = fit_quasi_polynomial(spec);
    CHECK(fit.formula.period() == 2);
    for (long n = 0; n < 40; ++n) CHECK(fit.formula.eval(n) == make_rational(n * n - (n % 2), 4));
    CHECK(fit.provenance.sample_min == 1);
    CHECK(fit.provenance.sample_max == 20);
    CHECK(fit.provenance.interpolation_points.size() == 6);
    CHECK(fit.provenance.verification_points.size() == 14);
  }

  TEST_CASE("a wrong hypothesis is refuted on held-out points") {
    FitSpec spec{1, 2, sample(1, 12, [](long n) { return n % 2 ? make_rational(n * n - 1, 4) : make_rational(n * n, 4); }), 3};
    try {
      fit_quasi_polynomial(spec);
      FAIL("expected a verification failure");
    } catch (const VerificationError& e) {
      CHECK(e.residue() == 0);
      CHECK(e.point() >= 4);
    }
  }

  TEST_CASE("underdetermined and degenerate inputs") {
    CHECK_THROWS_AS(fit_quasi_polynomial({2, 3, sample(1, 9, [](long n) { return Rational(n); }), 3}),
                    std::invalid_argument);
    auto dup = sample(1, 10, [](long n) { return Rational(n); });
    dup.push_back({3, 3});
    CHECK_THROWS_AS(fit_quasi_polynomial({1, 1, dup, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fit_quasi_polynomial({0, 1, {}, 3}), std::invalid_argument);
  }

  TEST_CASE("leading-term extrapolation") {
    // 3n^2 + 5n + 7 over n^2 converges to 3 with 1/n corrections.
    auto data = sample(5, 15, [](long n) { return Rational(3 * n * n + 5 * n + 7); });
    const auto est = fit_leading_term(data, 2);
    CHECK(est.estimate == 3);
    CHECK(est.converged);
    CHECK_THROWS(fit_leading_term(std::span<const FitSample>(data.data(), 2), 2));
  }
}
