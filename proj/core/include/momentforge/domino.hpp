#pragma once

// Adjacent equal-valued cell pairs ("same-number dominoes") on a uniformly
// random 0/1 board with m rows and n columns.
//
// The Stirling sum treats any i distinct slots as independent, which holds
// while the chosen slots form a forest. Grid cycles have length 4, so the sum
// is exact for r <= 3 on every board and for all r on 1 x n boards; from r = 4
// on an m, n >= 2 board it overcounts (2 x 2, r = 4: 85/2 against 44). The
// transfer-matrix PGF below is exact everywhere.

#include "momentforge/moments.hpp"
#include "momentforge/series.hpp"

namespace momentforge::domino {

inline constexpr const char* kMu = "mu";

struct BoardParams {
  long m = 1;
  long n = 1;

  /// Number of domino slots, 2mn - m - n.
  long slots() const { return 2 * m * n - m - n; }
  Rational mu() const { return make_rational(slots(), 2); }
};

BoardParams make_board(long m, long n);

/// Stirling sum E[X^r] = sum_i {r brace i} (2 mu)_i / 2^i, symbol mu.
Polynomial raw_moment_symbolic(int r);
Rational raw_moment(const BoardParams& board, int r);
MomentVector<Rational> raw_moments(const BoardParams& board, int r_max);

/// Exact PGF by a cell-by-cell transfer matrix over 2^min(m,n) profiles.
/// Guard: min(m, n) <= 12 and about 5e8 coefficient updates.
Polynomial board_pgf(const BoardParams& board);
/// Exact raw moments: the Stirling sum where it is exact, otherwise the PGF.
MomentVector<Rational> exact_raw_moments(const BoardParams& board, int r_max);
MomentVector<Rational> exact_central_moments(const BoardParams& board, int r_max);

/// Central moments of the Stirling sum, as polynomials in mu.
MomentVector<Polynomial> central_moments_symbolic(int r_max);
MomentVector<Rational> central_moments(const BoardParams& board, int r_max);

/// P_n(1+z) = (2+z)/(2 (1+z)^(1/2)) = G_n(1+z)/G_{n-1}(1+z) for a 1 x n board.
TruncatedSeries<Rational> board1n_step_series(int order);
/// B_r(n) = E[C(X - mu, r)] for a 1 x n board via B(n) = P * B(n-1), B(1) = 1.
MomentVector<Rational> board1n_binomial_moments(long n, int r_max);
/// G_n(1+z) = exp((n-1) log P) with coefficients polynomial in n.
TruncatedSeries<Polynomial> board1n_generating_series(int order);

}  // namespace momentforge::domino
