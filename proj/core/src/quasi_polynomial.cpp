#include "momentforge/quasi_polynomial.hpp"

#include <stdexcept>

namespace momentforge {

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw std::invalid_argument("quasi-polynomial needs at least one branch");
}

Rational QuasiPolynomial::eval(long n) const {
  if (n < 0) throw std::invalid_argument("quasi-polynomial evaluated at negative n");
  return branches_[static_cast<std::size_t>(n % period())].eval(Rational(n));
}

QuasiPolynomial QuasiPolynomial::canonical() const {
  const int p = period();
  for (int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (int j = d; j < p && ok; ++j) ok = branches_[static_cast<std::size_t>(j)] == branches_[static_cast<std::size_t>(j % d)];
    if (ok) return QuasiPolynomial(std::vector<Polynomial>(branches_.begin(), branches_.begin() + d));
  }
  return *this;
}

int QuasiPolynomial::max_degree() const {
  int d = Polynomial::kZeroDegree;
  for (const auto& b : branches_) d = std::max(d, b.degree());
  return d;
}

std::string QuasiPolynomial::to_string() const {
  if (period() == 1) return branches_[0].to_string();
  std::string out;
  for (int j = 0; j < period(); ++j) {
    if (j > 0) out += "; ";
    const auto& b = branches_[static_cast<std::size_t>(j)];
    const std::string sym = b.symbol().empty() ? "n" : b.symbol();
    out += sym + " mod " + std::to_string(period()) + " = " + std::to_string(j) + ": " + b.to_string();
  }
  return out;
}

}  // namespace momentforge
