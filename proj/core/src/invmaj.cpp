#include "momentforge/invmaj.hpp"

#include <mutex>
#include <stdexcept>

namespace momentforge::invmaj {

namespace {

const Polynomial kN = Polynomial::variable("n");

void check_n(long n) {
  if (n < 1) throw std::invalid_argument("invmaj: n must be at least 1");
}

// p_0..p_order, grown on demand.
std::vector<Polynomial> p_table(int order) {
  static std::mutex mutex;
  static std::vector<Polynomial> cache;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= order) cache.push_back(p_coefficient(static_cast<int>(cache.size())));
  return {cache.begin(), cache.begin() + order + 1};
}

}  // namespace

Polynomial pgf(int n) {
  check_n(n);
  Polynomial acc = Polynomial::constant(Rational(1), "q");
  for (int i = 2; i <= n; ++i) {
    std::vector<Rational> ones(static_cast<std::size_t>(i), Rational(1));
    acc *= Polynomial("q", std::move(ones));
  }
  return acc / Rational(factorial(static_cast<unsigned>(n)));
}

Polynomial mean() { return kN * (kN - Rational(1)) / Rational(4); }

Polynomial variance() { return kN * (kN - Rational(1)) * (kN * Rational(2) + Rational(5)) / Rational(72); }

Polynomial p_coefficient(int i) {
  if (i < 0) throw std::invalid_argument("p_coefficient: negative index");
  const Polynomial half = (kN - Rational(3)) / Rational(2);
  Polynomial acc = Polynomial::constant(Rational(0), "n");
  for (int s = 0; s <= i; ++s) {
    Polynomial term = binomial(half + Rational(s), s) * binomial(kN, i + 1 - s);
    if (s % 2 != 0) term = -term;
    acc += term;
  }
  return exact_div(acc, kN).set_symbol("n");
}

TruncatedSeries<Polynomial> p_series(int order) {
  TruncatedSeries<Polynomial> ratio(order);
  for (int j = 0; j <= order; ++j) ratio[j] = exact_div(binomial(kN, j + 1), kN).set_symbol("n");
  const Polynomial alpha = -(kN - Rational(1)) / Rational(2);
  return ratio * generalized_binomial_series(alpha, order);
}

MomentVector<Rational> binomial_moments(long n, int r_max) {
  check_n(n);
  if (r_max < 0) throw std::invalid_argument("binomial_moments: negative r_max");
  const auto p = p_table(r_max);
  TruncatedSeries<Rational> g = TruncatedSeries<Rational>::one(r_max);
  for (long m = 2; m <= n; ++m) {
    TruncatedSeries<Rational> step(r_max);
    for (int s = 0; s <= r_max; ++s) step[s] = p[static_cast<std::size_t>(s)].eval(Rational(m));
    g = g * step;
  }
  MomentVector<Rational> b{MomentKind::CentralBinomial, g.coefficients(), "invmaj", {{"n", n}}};
  return b;
}

MomentVector<Rational> central_moments(long n, int r_max) { return binomial_to_raw(binomial_moments(n, r_max)); }

MomentVector<Rational> raw_moments(long n, int r_max) {
  return central_to_raw(central_moments(n, r_max), mean().eval(Rational(n)));
}

std::vector<std::vector<Polynomial>> maj_table(int n) {
  check_n(n);
  const Polynomial one = Polynomial::constant(Rational(1), "q");
  std::vector<std::vector<Polynomial>> table{{one}};
  for (int m = 2; m <= n; ++m) {
    const auto& prev = table.back();
    // prefix[i] = sum_{j<i} F(m-1, j) with 0-based j.
    std::vector<Polynomial> prefix{Polynomial::constant(Rational(0), "q")};
    for (const auto& f : prev) prefix.push_back(prefix.back() + f);
    const Polynomial total = prefix.back();
    const Polynomial shift = Polynomial::monomial(Rational(1), static_cast<std::size_t>(m - 1), "q");
    std::vector<Polynomial> row;
    for (int i = 1; i <= m; ++i) {
      const Polynomial& below = prefix[static_cast<std::size_t>(i - 1)];
      row.push_back(below + shift * (total - below));
    }
    table.push_back(std::move(row));
  }
  return table;
}

Polynomial maj_generating_function(int n) {
  const auto table = maj_table(n);
  Polynomial acc = Polynomial::constant(Rational(0), "q");
  for (const auto& f : table.back()) acc += f;
  return acc;
}

}  // namespace momentforge::invmaj
