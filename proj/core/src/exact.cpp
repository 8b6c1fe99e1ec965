#include "momentforge/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace momentforge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto parse_int = [](std::string_view s) {
    Integer z;
    std::string buf(s);
    if (buf.empty() || z.set_str(buf, 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + buf + "'");
    }
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational ipow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero raised to a negative power");
    return ipow(Rational(1) / base, -exponent);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned>(exponent)),
             ipow(base.get_den(), static_cast<unsigned>(exponent)));
  return r;
}

Rational falling_factorial(const Rational& x, long i) {
  if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational r(1);
  for (long j = 0; j < i; ++j) r *= x - j;
  return r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be non-negative");
  return falling_factorial(x, k) / Rational(factorial(static_cast<unsigned>(k)));
}

Rational binomial(const Integer& n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be non-negative");
  if (sgn(n) >= 0) {
    if (n < k) return Rational(0);
    if (n.fits_ulong_p()) {
      Integer r;
      mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), static_cast<unsigned long>(k));
      return Rational(r);
    }
  }
  return binomial(Rational(n), k);
}

StirlingCache& StirlingCache::global() {
  static StirlingCache cache;
  return cache;
}

unsigned StirlingCache::max_order() const {
  std::shared_lock lock(mutex_);
  return second_.empty() ? 0 : static_cast<unsigned>(second_.size() - 1);
}

void StirlingCache::grow_to(unsigned order) {
  if (order > kMaxOrder) {
    throw std::out_of_range("Stirling order " + std::to_string(order) + " exceeds cache limit " +
                            std::to_string(kMaxOrder));
  }
  std::unique_lock lock(mutex_);
  if (second_.empty()) {
    second_.push_back({Integer(1)});
    first_.push_back({Integer(1)});
  }
  while (second_.size() <= order) {
    const auto r = second_.size();
    const auto& s2 = second_.back();
    const auto& s1 = first_.back();
    std::vector<Integer> row2(r + 1, 0), row1(r + 1, 0);
    for (std::size_t i = 1; i <= r; ++i) {
      row2[i] = s2[i - 1] + (i < r ? Integer(i) * s2[i] : Integer(0));
      // s(r,i) = s(r-1,i-1) - (r-1) s(r-1,i)
      row1[i] = s1[i - 1] - (i < r ? Integer(r - 1) * s1[i] : Integer(0));
    }
    second_.push_back(std::move(row2));
    first_.push_back(std::move(row1));
  }
}

Integer StirlingCache::second_kind(unsigned r, unsigned i) {
  if (i > r) return 0;
  {
    std::shared_lock lock(mutex_);
    if (r < second_.size()) return second_[r][i];
  }
  grow_to(r);
  std::shared_lock lock(mutex_);
  return second_[r][i];
}

Integer StirlingCache::first_kind_signed(unsigned j, unsigned k) {
  if (k > j) return 0;
  {
    std::shared_lock lock(mutex_);
    if (j < first_.size()) return first_[j][k];
  }
  grow_to(j);
  std::shared_lock lock(mutex_);
  return first_[j][k];
}

Integer stirling2(unsigned r, unsigned i) { return StirlingCache::global().second_kind(r, i); }

Integer stirling1_signed(unsigned j, unsigned k) {
  return StirlingCache::global().first_kind_signed(j, k);
}

}  // namespace momentforge
