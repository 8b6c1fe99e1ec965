#include "momentforge/domino.hpp"

#include <algorithm>
#include <stdexcept>

#include "momentforge/errors.hpp"

namespace momentforge::domino {

namespace {
const Polynomial kMuVar = Polynomial::variable(kMu);
}

BoardParams make_board(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("domino: m and n must be at least 1");
  return {m, n};
}

Polynomial raw_moment_symbolic(int r) {
  if (r < 0) throw std::invalid_argument("domino: negative moment order");
  const Polynomial slots = kMuVar * Rational(2);
  Polynomial acc = Polynomial::constant(Rational(0), kMu);
  for (int i = 0; i <= r; ++i) {
    const Integer s = stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i));
    if (sgn(s) == 0) continue;
    acc += falling_factorial(slots, i) * (Rational(s) / Rational(ipow(Integer(2), static_cast<unsigned>(i))));
  }
  return acc.set_symbol(kMu);
}

Rational raw_moment(const BoardParams& board, int r) {
  Rational acc = 0;
  const Rational slots(board.slots());
  for (int i = 0; i <= r; ++i) {
    const Integer s = stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i));
    if (sgn(s) == 0) continue;
    acc += Rational(s) * falling_factorial(slots, i) / Rational(ipow(Integer(2), static_cast<unsigned>(i)));
  }
  return acc;
}

MomentVector<Rational> raw_moments(const BoardParams& board, int r_max) {
  MomentVector<Rational> m{MomentKind::Raw, {}, "domino", {{"m", board.m}, {"n", board.n}}};
  for (int r = 0; r <= r_max; ++r) m.entries.push_back(raw_moment(board, r));
  return m;
}

Polynomial board_pgf(const BoardParams& board) {
  const long rows = std::min(board.m, board.n);
  const long cols = std::max(board.m, board.n);
  if (rows > 12) throw SizeGuardError("domino board_pgf: min(m, n) must be at most 12");
  const unsigned states = 1u << rows;
  if (static_cast<double>(states) * static_cast<double>(rows * cols) * static_cast<double>(board.slots() + 1) > 5e8)
    throw SizeGuardError("domino board_pgf: board too large for the transfer matrix");

  // Broken profile: bit i holds the latest filled cell in row i. count[s][v]
  // counts partial boards with profile s and v equal pairs so far.
  std::vector<std::vector<Integer>> count(states), next(states);
  count[0] = {Integer(1)};
  for (long c = 0; c < cols; ++c) {
    for (long i = 0; i < rows; ++i) {
      for (auto& poly : next) poly.clear();
      for (unsigned s = 0; s < states; ++s) {
        if (count[s].empty()) continue;
        for (unsigned bit = 0; bit < 2; ++bit) {
          std::size_t shift = 0;
          if (c > 0 && ((s >> i) & 1u) == bit) ++shift;
          if (i > 0 && ((s >> (i - 1)) & 1u) == bit) ++shift;
          const unsigned t = (s & ~(1u << i)) | (bit << i);
          auto& out = next[t];
          if (out.size() < count[s].size() + shift) out.resize(count[s].size() + shift, 0);
          for (std::size_t v = 0; v < count[s].size(); ++v) out[v + shift] += count[s][v];
        }
      }
      std::swap(count, next);
    }
  }
  std::vector<Integer> total;
  for (const auto& row : count) {
    if (total.size() < row.size()) total.resize(row.size(), 0);
    for (std::size_t v = 0; v < row.size(); ++v) total[v] += row[v];
  }
  const Rational boards(ipow(Integer(2), static_cast<unsigned>(rows * cols)));
  std::vector<Rational> coeffs;
  coeffs.reserve(total.size());
  for (const auto& t : total) coeffs.push_back(Rational(t) / boards);
  return Polynomial("q", std::move(coeffs));
}

MomentVector<Rational> exact_raw_moments(const BoardParams& board, int r_max) {
  if (std::min(board.m, board.n) == 1 || r_max <= 3) return raw_moments(board, r_max);
  const Polynomial pgf = board_pgf(board);
  MomentVector<Rational> m{MomentKind::Raw, {}, "domino", {{"m", board.m}, {"n", board.n}}};
  m.entries.assign(static_cast<std::size_t>(r_max) + 1, 0);
  const auto& c = pgf.coefficients();
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (sgn(c[v]) == 0) continue;
    Rational term = c[v];
    for (int r = 0; r <= r_max; ++r) {
      m.entries[static_cast<std::size_t>(r)] += term;
      term *= static_cast<long>(v);
    }
  }
  return m;
}

MomentVector<Rational> exact_central_moments(const BoardParams& board, int r_max) {
  return raw_to_central(exact_raw_moments(board, r_max), board.mu());
}

MomentVector<Polynomial> central_moments_symbolic(int r_max) {
  MomentVector<Polynomial> raw{MomentKind::Raw, {}, "domino", {}};
  for (int r = 0; r <= r_max; ++r) raw.entries.push_back(raw_moment_symbolic(r));
  auto c = raw_to_central(raw, kMuVar);
  for (auto& e : c.entries) e.set_symbol(kMu);
  return c;
}

MomentVector<Rational> central_moments(const BoardParams& board, int r_max) {
  return raw_to_central(raw_moments(board, r_max), board.mu());
}

TruncatedSeries<Rational> board1n_step_series(int order) {
  TruncatedSeries<Rational> numerator = TruncatedSeries<Rational>::one(order);
  if (order >= 1) numerator[1] = Rational(1, 2);
  return numerator * generalized_binomial_series(Rational(-1, 2), order);
}

MomentVector<Rational> board1n_binomial_moments(long n, int r_max) {
  if (n < 1) throw std::invalid_argument("board1n: n must be at least 1");
  const auto step = board1n_step_series(r_max);
  TruncatedSeries<Rational> g = TruncatedSeries<Rational>::one(r_max);
  for (long j = 2; j <= n; ++j) g = g * step;
  return {MomentKind::CentralBinomial, g.coefficients(), "board1n", {{"n", n}}};
}

TruncatedSeries<Polynomial> board1n_generating_series(int order) {
  TruncatedSeries<Polynomial> l = lift(log_series(board1n_step_series(order)), "n");
  l.scale(Polynomial::variable("n") - Rational(1));
  auto g = exp_series(l);
  for (int i = 0; i <= order; ++i) g[i].set_symbol("n");
  return g;
}

}  // namespace momentforge::domino
