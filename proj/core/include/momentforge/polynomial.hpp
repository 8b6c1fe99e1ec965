#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Poly<Rational> is the workhorse (closed forms in n, mu, or W = 2^n).
// Poly<Poly<Rational>> gives bivariate forms such as the Boolean k-cube
// moments: outer symbol W = 2^n, coefficients polynomial in n.

#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "momentforge/exact.hpp"

namespace momentforge {

template <class R>
class Poly;

template <class T>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};
template <class T>
inline constexpr bool is_poly_v = is_poly<T>::value;

/// Lifts a rational scalar into any coefficient ring of the tower.
template <class T>
T from_scalar(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return T(from_scalar<typename T::coefficient_type>(q));
  }
}

template <class R>
class Poly {
 public:
  using coefficient_type = R;
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(const R& constant) : coeffs_{constant} { trim(); }
  Poly(std::string symbol, std::vector<R> coeffs)
      : symbol_(std::move(symbol)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly variable(std::string symbol) {
    return Poly(std::move(symbol), {from_scalar<R>(0), from_scalar<R>(1)});
  }
  static Poly monomial(const R& c, std::size_t degree, std::string symbol) {
    std::vector<R> v(degree + 1, from_scalar<R>(0));
    v[degree] = c;
    return Poly(std::move(symbol), std::move(v));
  }
  static Poly constant(const R& c, std::string symbol) { return Poly(std::move(symbol), {c}); }

  const std::string& symbol() const { return symbol_; }
  Poly& set_symbol(std::string s) {
    symbol_ = std::move(s);
    return *this;
  }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// kZeroDegree for the zero polynomial.
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

  R coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : from_scalar<R>(0); }
  R constant_term() const { return coefficient(0); }

  /// (degree, coefficient) of the highest monomial. Throws for zero.
  std::pair<int, R> leading_term() const {
    if (is_zero()) throw std::invalid_argument("leading_term of the zero polynomial");
    return {degree(), coeffs_.back()};
  }

  Poly& operator+=(const Poly& o) {
    symbol_ = merge_symbol(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), from_scalar<R>(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    symbol_ = merge_symbol(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), from_scalar<R>(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    trim();
    return *this;
  }
  Poly& operator/=(const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& c : coeffs_) c /= q;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    out.symbol_ = merge_symbol(a, b);
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, from_scalar<R>(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (momentforge_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    out.trim();
    return out;
  }
  friend Poly operator*(Poly a, const Rational& q) { return a *= q; }
  friend Poly operator*(const Rational& q, Poly a) { return a *= q; }
  friend Poly operator/(Poly a, const Rational& q) { return a /= q; }

  friend Poly operator+(Poly a, const Rational& q) { return a += Poly(from_scalar<R>(q)); }
  friend Poly operator-(Poly a, const Rational& q) { return a -= Poly(from_scalar<R>(q)); }

  /// Equal coefficients; symbols must agree unless one side is constant.
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.is_constant() || a.symbol_ == b.symbol_;
  }

  /// Horner evaluation of the outer variable.
  R eval(const Rational& x) const {
    R acc = from_scalar<R>(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// Substitutes the outer variable by a polynomial over the same ring.
  Poly compose(const Poly& inner) const {
    Poly acc(symbol_, {});
    acc.symbol_ = inner.is_constant() ? symbol_ : inner.symbol_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner;
      acc += Poly(*it);
    }
    if (acc.symbol_.empty()) acc.symbol_ = inner.symbol_.empty() ? symbol_ : inner.symbol_;
    return acc;
  }

  /// p(a*x).
  Poly scale_argument(const Rational& a) const {
    Poly out = *this;
    Rational f(1);
    for (auto& c : out.coeffs_) {
      c *= f;
      f *= a;
    }
    out.trim();
    return out;
  }

  Poly derivative() const {
    Poly out(symbol_, {});
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      R c = coeffs_[i];
      c *= Rational(static_cast<long>(i));
      out.coeffs_.push_back(std::move(c));
    }
    out.trim();
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> Poly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return Poly<S>(symbol_, std::move(v));
  }

  /// Degree-descending canonical text, e.g. "1/24*n^2 - 1/24".
  std::string to_string() const;

 private:
  static bool momentforge_is_zero(const R& c) {
    if constexpr (std::is_same_v<R, Rational>) {
      return sgn(c) == 0;
    } else {
      return c.is_zero();
    }
  }

  static std::string merge_symbol(const Poly& a, const Poly& b) {
    if (a.symbol_ == b.symbol_) return a.symbol_;
    if (b.is_constant() && !a.symbol_.empty()) return a.symbol_;
    if (a.is_constant() && !b.symbol_.empty()) return b.symbol_;
    if (a.symbol_.empty()) return b.symbol_;
    if (b.symbol_.empty()) return a.symbol_;
    throw std::invalid_argument("polynomial symbol mismatch: '" + a.symbol_ + "' vs '" + b.symbol_ + "'");
  }

  void trim() {
    while (!coeffs_.empty() && momentforge_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::string symbol_;
  std::vector<R> coeffs_;  // index == degree, no trailing zero
};

using Polynomial = Poly<Rational>;
using BiPolynomial = Poly<Polynomial>;

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline bool is_zero(const BiPolynomial& p) { return p.is_zero(); }
inline bool is_one(const Polynomial& p) { return p.degree() == 0 && p.coefficient(0) == 1; }

/// x(x-1)...(x-i+1) over any ring of the tower; identity for i == 0.
template <class T>
T falling_factorial_of(const T& x, long i) {
  if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
  T r = from_scalar<T>(1);
  for (long j = 0; j < i; ++j) {
    T term = x;
    term -= from_scalar<T>(Rational(j));
    r *= term;
  }
  return r;
}

inline Polynomial falling_factorial(const Polynomial& x, long i) { return falling_factorial_of(x, i); }

/// Generalized binomial coefficient C(x, k) as a polynomial in x's symbol.
inline Polynomial binomial(const Polynomial& x, long k) {
  return falling_factorial_of(x, k) / Rational(factorial(static_cast<unsigned>(k)));
}

/// Quotient and remainder for Poly<Rational>. Throws std::domain_error for a
/// zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// num / den, throwing std::domain_error when the remainder is nonzero.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

/// Parses the canonical text back ("3/2*n^2 - n + 1"); used by CLI inputs.
Polynomial parse_polynomial(std::string_view text, const std::string& symbol);

template <>
std::string Poly<Rational>::to_string() const;
template <>
std::string Poly<Polynomial>::to_string() const;

}  // namespace momentforge
