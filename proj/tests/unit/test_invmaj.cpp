#include <doctest.h>

#include "momentforge/invmaj.hpp"
#include "momentforge/oracle.hpp"

using namespace momentforge;

TEST_SUITE("invmaj") {
  TEST_CASE("statistics of 52314") {
    const auto p = oracle::parse_permutation("52314");
    CHECK(oracle::inversions(p) == 6);
    CHECK(oracle::major_index(p) == 4);
    CHECK_THROWS(oracle::parse_permutation("1123"));
  }

  TEST_CASE("PGF, mean and variance against enumeration") {
    for (int n = 1; n <= 7; ++n) {
      const auto joint = oracle::enumerate_permutations(n, 2);
      const auto inv = joint.inv_marginal();
      CHECK(invmaj::pgf(n) == inv.pgf());
      CHECK(joint.maj_marginal() == inv);
      const auto m = oracle::histogram_moments(inv, 2);
      CHECK(invmaj::mean().eval(n) == m[1]);
      CHECK(invmaj::variance().eval(n) == m[2] - m[1] * m[1]);
    }
  }

  TEST_CASE("closed p_i matches the series route") {
    const auto s = invmaj::p_series(7);
    for (int i = 0; i <= 7; ++i) CHECK(invmaj::p_coefficient(i) == s[i]);
    CHECK(invmaj::p_coefficient(0) == Polynomial(Rational(1)));
    CHECK(invmaj::p_coefficient(1).is_zero());
  }

  TEST_CASE("binomial moments: recurrence vs PGF Taylor coefficients") {
    for (long n = 2; n <= 7; ++n) {
      const auto b = invmaj::binomial_moments(n, 6);
      const auto central = oracle::histogram_moments(oracle::enumerate_permutations(static_cast<int>(n)).inv_marginal(), 6);
      const Rational mu = central[1];
      // E[C(X - mu, r)] directly from the distribution.
      const auto h = oracle::enumerate_permutations(static_cast<int>(n)).inv_marginal();
      for (int r = 0; r <= 6; ++r) {
        Rational acc = 0;
        for (const auto& [v, c] : h.counts) acc += binomial(Rational(v) - mu, r) * Rational(c);
        CHECK(b[r] == acc / Rational(h.total));
      }
    }
  }

  TEST_CASE("maj recursion table rows are interchangeable after centering") {
    const auto table = invmaj::maj_table(5);
    CHECK(invmaj::maj_generating_function(5) * Rational(1, 120) == invmaj::pgf(5));
    // F(n,i) rows all have n-1 ... total count (n-1)!
    for (std::size_t i = 0; i < table[4].size(); ++i) {
      Rational total = 0;
      for (const auto& c : table[4][i].coefficients()) total += c;
      CHECK(total == 24);
    }
  }
}
