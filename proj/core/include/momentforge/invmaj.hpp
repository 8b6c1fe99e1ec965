#pragma once

// Inversion number and major index of a uniformly random permutation of [n].

#include <vector>

#include "momentforge/moments.hpp"
#include "momentforge/series.hpp"

namespace momentforge::invmaj {

/// F_n(q) = (1/n!) prod_{i=1}^n (1 - q^i)/(1 - q), symbol q.
Polynomial pgf(int n);

/// n(n-1)/4 and n(n-1)(2n+5)/72, symbol n.
Polynomial mean();
Polynomial variance();

/// p_i(n) = (1/n) sum_{s=0}^i (-1)^s C((n-3)/2 + s, s) C(n, i+1-s), the z^i
/// coefficient of P(n,z) = G_n(1+z)/G_{n-1}(1+z).
Polynomial p_coefficient(int i);

/// P(n,z) = ((1+z)^n - 1)/(n z) * (1+z)^(-(n-1)/2) expanded through z^order,
/// built from series products rather than the closed sum.
TruncatedSeries<Polynomial> p_series(int order);

/// B_r(n) = E[C(X - mu, r)] for r <= r_max from
/// B_r(n) = sum_{s=0}^r p_s(n) B_{r-s}(n-1), seeded with G_1 = 1.
MomentVector<Rational> binomial_moments(long n, int r_max);
MomentVector<Rational> central_moments(long n, int r_max);
MomentVector<Rational> raw_moments(long n, int r_max);

/// Rows F(m, 1..m) for m = 1..n, where F(m, i) is the maj generating
/// function of permutations of [m] ending in i. table[m-1][i-1] = F(m, i).
std::vector<std::vector<Polynomial>> maj_table(int n);

/// H_n(q) = sum over S_n of q^maj = F(n+1, n+1).
Polynomial maj_generating_function(int n);

}  // namespace momentforge::invmaj
