#include "momentforge/series.hpp"

namespace momentforge {

TruncatedSeries<Polynomial> generalized_binomial_series(const Polynomial& alpha, int order, std::string variable) {
  TruncatedSeries<Polynomial> s(order, std::move(variable));
  Polynomial falling = from_scalar<Polynomial>(1);
  for (int i = 0; i <= order; ++i) {
    if (i > 0) falling *= alpha - Rational(i - 1);
    s[i] = falling / Rational(factorial(static_cast<unsigned>(i)));
    if (s[i].symbol().empty()) s[i].set_symbol(alpha.symbol());
  }
  return s;
}

TruncatedSeries<Rational> generalized_binomial_series(const Rational& alpha, int order, std::string variable) {
  TruncatedSeries<Rational> s(order, std::move(variable));
  for (int i = 0; i <= order; ++i) s[i] = binomial(alpha, i);
  return s;
}

TruncatedSeries<Polynomial> lift(const TruncatedSeries<Rational>& s, const std::string& symbol) {
  return s.map_coefficients([&](const Rational& c) { return Polynomial::constant(c, symbol); });
}

namespace {

template <class R>
std::string render(const TruncatedSeries<R>& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    const R& c = s[i];
    if (detail::coefficient_is_zero(c)) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? s.variable() : s.variable() + "^" + std::to_string(i));
    std::string coef;
    bool negative = false;
    if constexpr (std::is_same_v<R, Rational>) {
      negative = sgn(c) < 0;
      Rational mag = abs(c);
      coef = (i > 0 && mag == 1) ? "" : to_string(mag);
    } else {
      if (c.is_constant()) {
        negative = sgn(c.coefficient(0)) < 0;
        Rational mag = abs(c.coefficient(0));
        coef = (i > 0 && mag == 1) ? "" : to_string(mag);
      } else {
        coef = "(" + c.to_string() + ")";
      }
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const TruncatedSeries<Rational>& s) { return render(s); }
std::string to_string(const TruncatedSeries<Polynomial>& s) { return render(s); }

}  // namespace momentforge
