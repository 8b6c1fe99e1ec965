#pragma once

// Exact scalars and the classical combinatorial numbers.
//
// Integer and Rational are GMP types. mpq_class keeps every arithmetic result
// in lowest terms with a positive denominator; values built from a raw
// numerator/denominator pair must go through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace momentforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (whitespace trimmed).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exponent);
/// Negative exponents allowed for nonzero base.
Rational ipow(const Rational& base, long exponent);

/// C(n, k) for any integer n (generalized through the falling-factorial
/// product when n is negative). Zero when 0 <= n < k. Throws
/// std::invalid_argument for k < 0.
Rational binomial(const Integer& n, long k);
inline Rational binomial(long n, long k) { return binomial(Integer(n), k); }
/// Generalized binomial coefficient x(x-1)...(x-k+1)/k!.
Rational binomial(const Rational& x, long k);

/// x(x-1)...(x-i+1); 1 for i == 0. Throws std::invalid_argument for i < 0.
Rational falling_factorial(const Rational& x, long i);

/// Thread-safe, grow-only tables of {r brace i} and signed s(j, k).
///
/// Invariant: sum_k s(j,k) x^k == x(x-1)...(x-j+1).
class StirlingCache {
 public:
  static constexpr unsigned kMaxOrder = 64;

  static StirlingCache& global();

  Integer second_kind(unsigned r, unsigned i);
  Integer first_kind_signed(unsigned j, unsigned k);
  unsigned max_order() const;

 private:
  void grow_to(unsigned order);

  mutable std::shared_mutex mutex_;
  // Row r holds entries 0..r.
  std::vector<std::vector<Integer>> second_;
  std::vector<std::vector<Integer>> first_;
};

/// Stirling number of the second kind via {r,i} = {r-1,i-1} + i{r-1,i}.
Integer stirling2(unsigned r, unsigned i);
/// Signed Stirling number of the first kind: (x)_j = sum_k s(j,k) x^k.
Integer stirling1_signed(unsigned j, unsigned k);

}  // namespace momentforge
