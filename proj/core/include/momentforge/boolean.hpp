#pragma once

// X_k(f): the number of k-dimensional subcubes contained in a uniformly
// random Boolean function f of n variables.
//
// Closed forms are polynomials in the symbol W = 2^n. For k >= 1 they are
// BiPolynomials: outer symbol W, coefficients polynomial in n.

#include <optional>
#include <vector>

#include "momentforge/moments.hpp"
#include "momentforge/series.hpp"

namespace momentforge::boolean {

inline constexpr const char* kW = "W";
inline constexpr const char* kN = "n";

struct BooleanParams {
  int n = 1;
  int k = 0;
};

/// Substitutes W = 2^n (and then n) into a closed form.
Rational eval_at(const Polynomial& in_w, long n);
Rational eval_at(const BiPolynomial& form, long n);

/// E[X_0^r] = sum_i {r brace i} (W)_i / 2^i.
Polynomial raw_moment_k0(int r);
MomentVector<Polynomial> raw_moments_k0(int r_max);
/// Central moments about mu = W/2.
MomentVector<Polynomial> central_moments_k0(int r_max);

/// Coefficient of W^(r-t) in E[(X_0 - mu)^r]:
/// sum_{i=t}^r (-1/2)^(r-i) C(r,i) sum_{j=i-t}^i {i brace j} s(j, i-t) / 2^j.
Rational central_coefficient(int r, int t);

struct IdentityRow {
  int r = 0;
  int t = 0;
  Rational value;
  Rational expected;
  bool holds = false;
};

/// Every (r, t) with r <= r_max on which a closed value is claimed: zero for
/// odd r and for even r with t < r/2; (2k)!/(8^k k!) for r = 2k, t = k.
std::vector<IdentityRow> identity_battery(int r_max);

/// C(n,k) W / (2^k 2^(2^k)).
BiPolynomial k_first_moment(int k);
/// E[X_k]^2 + sum_{i=0}^k C(n; i, k-i, k-i, n-2k+i) 2^(n-i) (2^(2^i) - 1) / 2^(2^(k+1)).
BiPolynomial k_second_moment(int k);
BiPolynomial k_variance(int k);

/// n^2/2^9 [24 n W + 6(2n+1) W^2 + n W^3].
BiPolynomial k1_third_moment();
/// The same through the 1-cube / 0-cube / no-overlap decomposition with
/// a = n 2^(n-1), b = 12 n(n-1) 2^(n-2), c = 32 n(n-1)(n-2) 2^(n-3).
BiPolynomial k1_third_moment_by_overlap();
/// E[X_1^r] for r = 0..3.
MomentVector<BiPolynomial> k1_raw_moments();

/// P(n,z) = [(2+z)/(2 sqrt(1+z))]^(W/2) = exp((W/2) L(z)),
/// L = log(1 + z/2) - log(1+z)/2.
TruncatedSeries<Polynomial> p_series_k0(int order);
/// G_n(1+z) = exp(W L(z)); coefficient r is B_r as a polynomial in W.
TruncatedSeries<Polynomial> binomial_moments_k0(int order);
/// Numeric B_r(n) from B_r(n) = sum_s p_s(n) B_{r-s}(n-1), starting from
/// G_0(1+z) = (1 + z/2)(1+z)^(-1/2).
MomentVector<Rational> binomial_moments_k0_recurrence(long n, int r_max);

/// Independence approximation: Y counts k-cubes among the C(m, 2^k) subsets
/// of a random f with |f| = m, each a cube with probability
/// p_k = C(n,k) (2^k)! / (2^k 2^(n(2^k-1))).
struct ApproxH {
  int n = 0;
  int k = 0;
  Rational p;
  Rational mean;      // E[Y] = H'(1)
  Rational variance;  // H''(1) + H'(1) - H'(1)^2
  std::optional<Polynomial> pgf;  // H_n(q), when its degree fits the budget
};

Rational approx_h_probability(int n, int k);
/// Guard: n <= 14. H_n(q) is expanded only when C(2^n, 2^k) <= max_degree.
ApproxH approx_h(int n, int k, std::size_t max_degree = 512);

}  // namespace momentforge::boolean
