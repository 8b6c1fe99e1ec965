#pragma once

// Conversions among raw, central and binomial moments, Gaussian targets, and
// the method-of-moments normality report.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "momentforge/polynomial.hpp"
#include "momentforge/real.hpp"

namespace momentforge {

/// Binomial = E[C(X, r)]; CentralBinomial = E[C(X - mu, r)], the Taylor
/// coefficients of the centralized PGF at q = 1.
enum class MomentKind { Raw, Central, Binomial, CentralBinomial };

std::string_view to_string(MomentKind kind);

using ParamMap = std::map<std::string, std::int64_t>;

/// Exact moments of orders 0..r_max with provenance.
template <class T>
struct MomentVector {
  MomentKind kind = MomentKind::Raw;
  std::vector<T> entries;
  std::string family;
  ParamMap params;

  int r_max() const { return static_cast<int>(entries.size()) - 1; }
  const T& operator[](int r) const { return entries.at(static_cast<std::size_t>(r)); }
};

namespace detail {
inline MomentKind power_kind_of(MomentKind binomial_kind) {
  switch (binomial_kind) {
    case MomentKind::Binomial:
      return MomentKind::Raw;
    case MomentKind::CentralBinomial:
      return MomentKind::Central;
    default:
      throw std::invalid_argument("expected a binomial moment vector");
  }
}
inline MomentKind binomial_kind_of(MomentKind power_kind) {
  switch (power_kind) {
    case MomentKind::Raw:
      return MomentKind::Binomial;
    case MomentKind::Central:
      return MomentKind::CentralBinomial;
    default:
      throw std::invalid_argument("expected a raw or central moment vector");
  }
}
}  // namespace detail

/// M_r = sum_i {r brace i} i! B_i. Binomial input yields raw moments;
/// about-the-mean binomial input yields central moments.
template <class T>
MomentVector<T> binomial_to_raw(const MomentVector<T>& b) {
  MomentVector<T> m{detail::power_kind_of(b.kind), {}, b.family, b.params};
  for (int r = 0; r <= b.r_max(); ++r) {
    T acc = from_scalar<T>(0);
    for (int i = 0; i <= r; ++i) {
      const Rational w(stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i)) *
                       factorial(static_cast<unsigned>(i)));
      if (sgn(w) == 0) continue;
      T term = b[i];
      term *= w;
      acc += term;
    }
    m.entries.push_back(std::move(acc));
  }
  return m;
}

/// Inverse of binomial_to_raw by forward substitution on the triangular
/// Stirling system.
template <class T>
MomentVector<T> raw_to_binomial(const MomentVector<T>& m) {
  MomentVector<T> b{detail::binomial_kind_of(m.kind), {}, m.family, m.params};
  for (int r = 0; r <= m.r_max(); ++r) {
    T acc = m[r];
    for (int i = 0; i < r; ++i) {
      const Rational w(stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i)) *
                       factorial(static_cast<unsigned>(i)));
      T term = b.entries[static_cast<std::size_t>(i)];
      term *= w;
      acc -= term;
    }
    acc *= Rational(1) / Rational(factorial(static_cast<unsigned>(r)));
    b.entries.push_back(std::move(acc));
  }
  return b;
}

/// E[(X-mu)^r] = sum_i (-1)^(r-i) C(r,i) E[X^i] mu^(r-i). mu must equal M_1.
template <class T>
MomentVector<T> raw_to_central(const MomentVector<T>& m, const T& mu) {
  if (m.kind != MomentKind::Raw) throw std::invalid_argument("raw_to_central expects raw moments");
  if (m.r_max() >= 1 && !(m[1] == mu)) throw std::invalid_argument("raw_to_central: mu differs from the first moment");
  MomentVector<T> c{MomentKind::Central, {}, m.family, m.params};
  std::vector<T> mu_pow{from_scalar<T>(1)};
  for (int r = 1; r <= m.r_max(); ++r) mu_pow.push_back(mu_pow.back() * mu);
  for (int r = 0; r <= m.r_max(); ++r) {
    T acc = from_scalar<T>(0);
    for (int i = 0; i <= r; ++i) {
      T term = m[i] * mu_pow[static_cast<std::size_t>(r - i)];
      Rational w = binomial(static_cast<long>(r), static_cast<long>(i));
      if ((r - i) % 2 != 0) w = -w;
      term *= w;
      acc += term;
    }
    c.entries.push_back(std::move(acc));
  }
  if (c.r_max() >= 1) c.entries[1] = from_scalar<T>(0);
  return c;
}

/// E[X^r] = sum_i C(r,i) E[(X-mu)^i] mu^(r-i).
template <class T>
MomentVector<T> central_to_raw(const MomentVector<T>& c, const T& mu) {
  if (c.kind != MomentKind::Central) throw std::invalid_argument("central_to_raw expects central moments");
  MomentVector<T> m{MomentKind::Raw, {}, c.family, c.params};
  std::vector<T> mu_pow{from_scalar<T>(1)};
  for (int r = 1; r <= c.r_max(); ++r) mu_pow.push_back(mu_pow.back() * mu);
  for (int r = 0; r <= c.r_max(); ++r) {
    T acc = from_scalar<T>(0);
    for (int i = 0; i <= r; ++i) {
      T term = c[i] * mu_pow[static_cast<std::size_t>(r - i)];
      term *= binomial(static_cast<long>(r), static_cast<long>(i));
      acc += term;
    }
    m.entries.push_back(std::move(acc));
  }
  return m;
}

/// Standard normal moment: (2s)!/(2^s s!) for r = 2s, zero for odd r.
Rational gaussian_moment(int r);

/// m_r = central_r / central_2^(r/2) for r = 0..r_max. Even orders are exact
/// before conversion; odd orders use an MPFR square root at `digits10`.
/// Throws std::domain_error when the variance is zero.
std::vector<Real> normalized_moments(const MomentVector<Rational>& central, unsigned digits10 = 50);

struct NormalityOptions {
  double threshold = 0.05;
  unsigned digits10 = 50;
};

struct NormalityRow {
  int r = 0;
  std::int64_t n = 0;
  Real normalized;
  Rational target;
  Real deviation;  // |m_r - target|
};

struct NormalityVerdict {
  int r = 0;
  bool converged = false;
  Real final_deviation;
  bool monotone_tail = false;
};

struct NormalityReport {
  std::string family;
  ParamMap params;
  std::vector<std::int64_t> grid;
  int r_max = 0;
  NormalityOptions options;
  std::vector<NormalityRow> rows;  // ordered by r, then grid order
  std::vector<NormalityVerdict> verdicts;

  bool all_converged() const;
  const NormalityVerdict& verdict(int r) const;
};

using CentralMomentSource = std::function<MomentVector<Rational>(std::int64_t n, int r_max)>;

/// Tabulates |m_r - gaussian_moment(r)| for r = 1..r_max along the grid.
/// Verdict per r: deviation at the last grid point below the threshold and
/// non-increasing over the last three grid points. Grids shorter than three
/// points are rejected.
NormalityReport normality_report(std::string family, ParamMap params, std::span<const std::int64_t> grid, int r_max,
                                 const CentralMomentSource& central_at, NormalityOptions options = {});

}  // namespace momentforge
