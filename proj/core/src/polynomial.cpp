#include "momentforge/polynomial.hpp"

#include <cctype>

namespace momentforge {

namespace {

std::string power_of(const std::string& symbol, std::size_t d) {
  const std::string s = symbol.empty() ? "x" : symbol;
  return d == 1 ? s : s + "^" + std::to_string(d);
}

}  // namespace

template <>
std::string Poly<Rational>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (k == 0) {
      out += momentforge::to_string(mag);
    } else {
      if (mag != 1) out += momentforge::to_string(mag) + "*";
      out += power_of(symbol_, k);
    }
  }
  return out;
}

template <>
std::string Poly<Polynomial>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Polynomial& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (c.is_constant()) {
      const Rational v = c.coefficient(0);
      const bool negative = sgn(v) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const Rational mag = abs(v);
      if (k == 0) {
        out += momentforge::to_string(mag);
      } else {
        if (mag != 1) out += momentforge::to_string(mag) + "*";
        out += power_of(symbol_, k);
      }
    } else {
      if (!first) out += " + ";
      out += "(" + c.to_string() + ")";
      if (k > 0) out += "*" + power_of(symbol_, k);
    }
    first = false;
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::string symbol = num.is_constant() ? den.symbol() : num.symbol();
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {Polynomial(symbol, {}), num};
  std::vector<Rational> quot(rem.size() - d.size() + 1, 0);
  const Rational lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + d.size() - 1] / lead;
    quot[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  return {Polynomial(symbol, std::move(quot)), Polynomial(symbol, std::move(rem))};
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::domain_error("polynomial division leaves remainder " + r.to_string());
  return q;
}

Polynomial parse_polynomial(std::string_view text, const std::string& symbol) {
  // Grammar: term (('+'|'-') term)*, term = [rational '*'] symbol ['^' int] | rational
  Polynomial out(symbol, {});
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    bool has_number = pos > start;
    if (has_number) coef = parse_rational(text.substr(start, pos - start));
    skip();
    std::size_t degree = 0;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (text.substr(pos, symbol.size()) != symbol) fail("expected symbol after '*'");
    }
    if (!symbol.empty() && text.substr(pos, symbol.size()) == symbol) {
      pos += symbol.size();
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("missing exponent");
        degree = std::stoul(std::string(text.substr(start, pos - start)));
      }
    } else if (!has_number) {
      fail("expected a term");
    }
    out += Polynomial::monomial(coef * sign, degree, symbol);
  }
  return out;
}

}  // namespace momentforge
