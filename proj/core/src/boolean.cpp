#include "momentforge/boolean.hpp"

#include <stdexcept>

#include "momentforge/errors.hpp"

namespace momentforge::boolean {

namespace {

const Polynomial kWVar = Polynomial::variable(kW);
const Polynomial kNVar = Polynomial::variable(kN);

Integer pow2(unsigned e) { return ipow(Integer(2), e); }

void check_k(int k) {
  if (k < 0 || k > 16) throw std::invalid_argument("boolean: k must be in [0, 16]");
}

// c(n) * W^d
BiPolynomial w_term(const Polynomial& c, std::size_t d) { return BiPolynomial::monomial(c, d, kW); }

BiPolynomial constant_in_w(const Polynomial& c) { return BiPolynomial::constant(c, kW); }

Integer binomial_integer(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace

Rational eval_at(const Polynomial& in_w, long n) {
  if (n < 0) throw std::invalid_argument("eval_at: negative n");
  return in_w.eval(Rational(pow2(static_cast<unsigned>(n))));
}

Rational eval_at(const BiPolynomial& form, long n) {
  if (n < 0) throw std::invalid_argument("eval_at: negative n");
  return form.eval(Rational(pow2(static_cast<unsigned>(n)))).eval(Rational(n));
}

Polynomial raw_moment_k0(int r) {
  if (r < 0) throw std::invalid_argument("raw_moment_k0: negative order");
  Polynomial acc = Polynomial::constant(Rational(0), kW);
  for (int i = 0; i <= r; ++i) {
    const Integer s = stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i));
    if (sgn(s) == 0) continue;
    acc += falling_factorial(kWVar, i) * (Rational(s) / Rational(pow2(static_cast<unsigned>(i))));
  }
  return acc.set_symbol(kW);
}

MomentVector<Polynomial> raw_moments_k0(int r_max) {
  MomentVector<Polynomial> m{MomentKind::Raw, {}, "boolean", {{"k", 0}}};
  for (int r = 0; r <= r_max; ++r) m.entries.push_back(raw_moment_k0(r));
  return m;
}

MomentVector<Polynomial> central_moments_k0(int r_max) {
  return raw_to_central(raw_moments_k0(r_max), kWVar / Rational(2));
}

Rational central_coefficient(int r, int t) {
  if (r < 0 || t < 0 || t > r) throw std::invalid_argument("central_coefficient needs 0 <= t <= r");
  Rational acc = 0;
  for (int i = t; i <= r; ++i) {
    Rational inner = 0;
    for (int j = i - t; j <= i; ++j) {
      inner += Rational(stirling2(static_cast<unsigned>(i), static_cast<unsigned>(j)) *
                        stirling1_signed(static_cast<unsigned>(j), static_cast<unsigned>(i - t))) /
               Rational(pow2(static_cast<unsigned>(j)));
    }
    acc += ipow(Rational(-1, 2), r - i) * binomial(static_cast<long>(r), static_cast<long>(i)) * inner;
  }
  return acc;
}

std::vector<IdentityRow> identity_battery(int r_max) {
  if (r_max < 1) throw std::invalid_argument("identity_battery: r_max must be at least 1");
  std::vector<IdentityRow> rows;
  for (int r = 1; r <= r_max; ++r) {
    const int t_max = r % 2 != 0 ? r : r / 2;
    for (int t = 0; t <= t_max; ++t) {
      IdentityRow row{r, t, central_coefficient(r, t), Rational(0), false};
      if (r % 2 == 0 && t == r / 2) {
        const unsigned k = static_cast<unsigned>(t);
        row.expected = Rational(factorial(2 * k)) / Rational(ipow(Integer(8), k) * factorial(k));
      }
      row.holds = row.value == row.expected;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

BiPolynomial k_first_moment(int k) {
  check_k(k);
  const Rational scale = Rational(1) / Rational(pow2(static_cast<unsigned>(k)) * pow2(1u << k));
  return w_term(binomial(kNVar, k) * scale, 1);
}

BiPolynomial k_variance(int k) {
  check_k(k);
  Polynomial coeff = Polynomial::constant(Rational(0), kN);
  const Integer denom = pow2(2u << k);
  for (int i = 0; i <= k; ++i) {
    const Integer arrangements = factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(k - i)) *
                                 factorial(static_cast<unsigned>(k - i));
    const Rational w = Rational(pow2(1u << i) - 1) /
                       Rational(arrangements * pow2(static_cast<unsigned>(i)) * denom);
    coeff += falling_factorial(kNVar, 2 * k - i) * w;
  }
  return w_term(coeff.set_symbol(kN), 1);
}

BiPolynomial k_second_moment(int k) {
  const BiPolynomial mean = k_first_moment(k);
  return mean * mean + k_variance(k);
}

BiPolynomial k1_third_moment() {
  const Polynomial& n = kNVar;
  BiPolynomial inner = w_term(n * Rational(24), 1) + w_term((n * Rational(2) + Rational(1)) * Rational(6), 2) +
                       w_term(n, 3);
  return constant_in_w(n * n / Rational(512)) * inner;
}

BiPolynomial k1_third_moment_by_overlap() {
  const Polynomial& n = kNVar;
  const BiPolynomial a = w_term(n / Rational(2), 1);
  const BiPolynomial b = w_term(n * (n - Rational(1)) * Rational(3), 1);
  const BiPolynomial c = w_term(n * (n - Rational(1)) * (n - Rational(2)) * Rational(4), 1);
  const BiPolynomial aa = a * (a - Rational(1)) * Rational(3);
  const BiPolynomial ba = b * (a - constant_in_w(n * Rational(3)) + Rational(2));
  const BiPolynomial rest = a * a * a - (a + b + c + aa + ba);
  return a / Rational(4) + b / Rational(8) + c / Rational(16) + aa / Rational(16) + ba / Rational(32) +
         rest / Rational(64);
}

MomentVector<BiPolynomial> k1_raw_moments() {
  MomentVector<BiPolynomial> m{MomentKind::Raw, {}, "boolean", {{"k", 1}}};
  m.entries = {from_scalar<BiPolynomial>(1), k_first_moment(1), k_second_moment(1), k1_third_moment()};
  return m;
}

namespace {

TruncatedSeries<Rational> log_step(int order) {
  TruncatedSeries<Rational> half_step = TruncatedSeries<Rational>::one(order);
  if (order >= 1) half_step[1] = Rational(1, 2);
  TruncatedSeries<Rational> full_step = TruncatedSeries<Rational>::one(order);
  if (order >= 1) full_step[1] = Rational(1);
  return log_series(half_step) - log_series(full_step) * Rational(1, 2);
}

TruncatedSeries<Polynomial> exp_of_multiple(const Polynomial& factor, int order) {
  TruncatedSeries<Polynomial> l = lift(log_step(order), kW);
  l.scale(factor);
  auto e = exp_series(l);
  for (int i = 0; i <= order; ++i) e[i].set_symbol(kW);
  return e;
}

}  // namespace

TruncatedSeries<Polynomial> p_series_k0(int order) { return exp_of_multiple(kWVar / Rational(2), order); }

TruncatedSeries<Polynomial> binomial_moments_k0(int order) { return exp_of_multiple(kWVar, order); }

MomentVector<Rational> binomial_moments_k0_recurrence(long n, int r_max) {
  if (n < 0 || n > 64) throw std::invalid_argument("binomial_moments_k0_recurrence: n must be in [0, 64]");
  const auto p = p_series_k0(r_max);
  TruncatedSeries<Rational> g = exp_series(log_step(r_max));
  for (long j = 1; j <= n; ++j) {
    TruncatedSeries<Rational> step(r_max);
    for (int s = 0; s <= r_max; ++s) step[s] = eval_at(p[s], j);
    g = g * step;
  }
  return {MomentKind::CentralBinomial, g.coefficients(), "boolean", {{"n", n}, {"k", 0}}};
}

Rational approx_h_probability(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("approx_h needs 0 <= k <= n");
  const unsigned cube = 1u << k;
  return binomial(static_cast<long>(n), static_cast<long>(k)) * Rational(factorial(cube)) /
         Rational(Integer(cube) * pow2(static_cast<unsigned>(n) * (cube - 1)));
}

ApproxH approx_h(int n, int k, std::size_t max_degree) {
  if (n > 14) throw SizeGuardError("approx_h: n above 14");
  ApproxH out;
  out.n = n;
  out.k = k;
  out.p = approx_h_probability(n, k);
  const unsigned long vertices = 1ul << n;
  const unsigned long cube = 1ul << k;
  const Integer max_objects = binomial_integer(Integer(vertices), cube);
  const bool expand = max_objects <= Integer(static_cast<unsigned long>(max_degree));

  Integer weight = 1;  // C(2^n, m)
  Integer first = 0;   // sum C(2^n,m) M
  Integer second = 0;  // sum C(2^n,m) M(M-1)
  Polynomial base("q", {Rational(1) - out.p, out.p});
  Polynomial power = Polynomial::constant(Rational(1), "q");
  Integer power_exponent = 0;
  Polynomial h = Polynomial::constant(Rational(0), "q");
  for (unsigned long m = 0; m <= vertices; ++m) {
    const Integer objects = binomial_integer(Integer(m), cube);
    first += weight * objects;
    second += weight * objects * (objects - 1);
    if (expand) {
      for (; power_exponent < objects; ++power_exponent) power *= base;
      h += power * Rational(weight);
    }
    weight = weight * (vertices - m) / (m + 1);
  }
  const Rational total(pow2(static_cast<unsigned>(vertices)));
  out.mean = out.p * Rational(first) / total;
  const Rational falling2 = out.p * out.p * Rational(second) / total;
  out.variance = falling2 + out.mean - out.mean * out.mean;
  if (expand) out.pgf = (h / total).set_symbol("q");
  return out;
}

}  // namespace momentforge::boolean
