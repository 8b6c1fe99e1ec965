#pragma once

// Truncated power series in one variable (conventionally z) over the exact
// coefficient tower. Every series carries an explicit order R and holds the
// coefficients of z^0..z^R; ring operations never look past R.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "momentforge/polynomial.hpp"

namespace momentforge {

namespace detail {

inline Rational inverse_of_unit(const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("series division: constant term is zero (singular)");
  return Rational(1) / c;
}

template <class R>
Poly<R> inverse_of_unit(const Poly<R>& c) {
  if (c.degree() != 0) {
    throw std::domain_error("series division: constant term " + c.to_string() + " is not an invertible scalar");
  }
  return Poly<R>(inverse_of_unit(c.coefficient(0)));
}

inline bool coefficient_is_zero(const Rational& c) { return sgn(c) == 0; }
template <class R>
bool coefficient_is_zero(const Poly<R>& c) {
  return c.is_zero();
}

inline bool coefficient_is_one(const Rational& c) { return c == 1; }
template <class R>
bool coefficient_is_one(const Poly<R>& c) {
  return c.degree() == 0 && coefficient_is_one(c.coefficient(0));
}

}  // namespace detail

template <class R>
class TruncatedSeries {
 public:
  using coefficient_type = R;

  explicit TruncatedSeries(int order, std::string variable = "z")
      : variable_(std::move(variable)), coeffs_(checked_size(order), from_scalar<R>(0)) {}
  TruncatedSeries(std::vector<R> coeffs, int order, std::string variable = "z")
      : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order), from_scalar<R>(0));
  }

  static TruncatedSeries one(int order, std::string variable = "z") {
    TruncatedSeries s(order, std::move(variable));
    s.coeffs_[0] = from_scalar<R>(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::string& variable() const { return variable_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  R& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  TruncatedSeries& scale(const R& c) {
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& q) { return a *= q; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return series_div(a, b); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

  void check_compatible(const TruncatedSeries& o) const {
    if (variable_ != o.variable_) {
      throw std::invalid_argument("series variable mismatch: '" + variable_ + "' vs '" + o.variable_ + "'");
    }
    if (coeffs_.size() != o.coeffs_.size()) {
      throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
    }
  }

  template <class F>
  auto map_coefficients(F&& f) const -> TruncatedSeries<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return TruncatedSeries<S>(std::move(v), order(), variable_);
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::string variable_;
  std::vector<R> coeffs_;
};

/// Cauchy product truncated at the common order.
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  a.check_compatible(b);
  const int order = a.order();
  TruncatedSeries<R> out(order, a.variable());
  for (int i = 0; i <= order; ++i) {
    if (detail::coefficient_is_zero(a[i])) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// q with q*b == a through the common order. Throws std::domain_error when
/// b's constant term is not invertible.
template <class R>
TruncatedSeries<R> series_div(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  a.check_compatible(b);
  const R inv = detail::inverse_of_unit(b[0]);
  const int order = a.order();
  TruncatedSeries<R> q(order, a.variable());
  for (int m = 0; m <= order; ++m) {
    R acc = a[m];
    for (int k = 1; k <= m; ++k) acc -= b[k] * q[m - k];
    q[m] = acc * inv;
  }
  return q;
}

/// sum_k a^k / k!. Requires a zero constant term.
template <class R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& a) {
  if (!detail::coefficient_is_zero(a[0])) throw std::invalid_argument("exp_series: constant term must be zero");
  const int order = a.order();
  TruncatedSeries<R> e(order, a.variable());
  e[0] = from_scalar<R>(1);
  // m e_m = sum_{k=1}^m k a_k e_{m-k}
  for (int m = 1; m <= order; ++m) {
    R acc = from_scalar<R>(0);
    for (int k = 1; k <= m; ++k) {
      R term = a[k] * e[m - k];
      term *= Rational(k);
      acc += term;
    }
    acc *= Rational(1, m);
    e[m] = acc;
  }
  return e;
}

/// L with exp_series(L) == a. Requires constant term 1.
template <class R>
TruncatedSeries<R> log_series(const TruncatedSeries<R>& a) {
  if (!detail::coefficient_is_one(a[0])) throw std::invalid_argument("log_series: constant term must be 1");
  const int order = a.order();
  TruncatedSeries<R> l(order, a.variable());
  // m l_m = m a_m - sum_{k=1}^{m-1} k l_k a_{m-k}
  for (int m = 1; m <= order; ++m) {
    R acc = a[m];
    acc *= Rational(m);
    for (int k = 1; k < m; ++k) {
      R term = l[k] * a[m - k];
      term *= Rational(k);
      acc -= term;
    }
    acc *= Rational(1, m);
    l[m] = acc;
  }
  return l;
}

/// (1+z)^alpha = sum_i C(alpha, i) z^i with coefficients polynomial in
/// alpha's symbol.
TruncatedSeries<Polynomial> generalized_binomial_series(const Polynomial& alpha, int order,
                                                        std::string variable = "z");
TruncatedSeries<Rational> generalized_binomial_series(const Rational& alpha, int order,
                                                      std::string variable = "z");

/// Rational series viewed over Poly<Rational> (constant coefficients).
TruncatedSeries<Polynomial> lift(const TruncatedSeries<Rational>& s, const std::string& symbol);

/// Canonical text "1 + 1/8*z^2 - ..." with polynomial coefficients parenthesized.
std::string to_string(const TruncatedSeries<Rational>& s);
std::string to_string(const TruncatedSeries<Polynomial>& s);

}  // namespace momentforge
