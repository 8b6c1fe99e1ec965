#pragma once

#include <string>
#include <vector>

#include "momentforge/polynomial.hpp"

namespace momentforge {

/// One polynomial per residue class: branch j applies when n = j (mod period).
class QuasiPolynomial {
 public:
  QuasiPolynomial() : branches_(1) {}
  explicit QuasiPolynomial(std::vector<Polynomial> branches);

  int period() const { return static_cast<int>(branches_.size()); }
  const std::vector<Polynomial>& branches() const { return branches_; }
  const Polynomial& branch(int residue) const { return branches_.at(static_cast<std::size_t>(residue)); }

  /// Throws std::invalid_argument for n < 0.
  Rational eval(long n) const;

  /// Smallest period d dividing the current one such that branch j equals
  /// branch j mod d for every j.
  QuasiPolynomial canonical() const;

  int max_degree() const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a.branches_ == b.branches_;
  }

  /// "n mod 2 = 0: ...; n mod 2 = 1: ..." (or the single branch text).
  std::string to_string() const;

 private:
  std::vector<Polynomial> branches_;
};

}  // namespace momentforge
