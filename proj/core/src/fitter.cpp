#include "momentforge/fitter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace momentforge {

namespace {

long residue_of(long n, int period) { return ((n % period) + period) % period; }

// Solves V c = y for the Vandermonde system on `points` with Bareiss
// elimination over the integers (y scaled by the lcm of its denominators).
std::vector<Rational> solve_vandermonde(const std::vector<FitSample>& points) {
  const std::size_t size = points.size();
  Integer scale = 1;
  for (const auto& p : points) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.value.get_den_mpz_t());
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size + 1));
  for (std::size_t i = 0; i < size; ++i) {
    Integer power = 1;
    for (std::size_t j = 0; j < size; ++j) {
      a[i][j] = power;
      power *= points[i].n;
    }
    Rational scaled = points[i].value * Rational(scale);
    a[i][size] = scaled.get_num();
  }
  Integer previous = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && sgn(a[pivot][k]) == 0) ++pivot;
    if (pivot == size) throw std::invalid_argument("fit: singular interpolation system (duplicate sample points?)");
    std::swap(a[k], a[pivot]);
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j <= size; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  std::vector<Rational> c(size);
  for (std::size_t i = size; i-- > 0;) {
    Rational acc(a[i][size]);
    for (std::size_t j = i + 1; j < size; ++j) acc -= Rational(a[i][j]) * c[j];
    c[i] = acc / Rational(a[i][i]);
  }
  for (auto& x : c) x /= Rational(scale);
  return c;
}

}  // namespace

FitResult fit_quasi_polynomial(const FitSpec& spec, const std::string& symbol) {
  if (spec.period < 1) throw std::invalid_argument("fit: period must be at least 1");
  if (spec.degree < 0) throw std::invalid_argument("fit: degree must be non-negative");
  if (spec.verification_points < 1) throw std::invalid_argument("fit: at least one verification point is required");
  if (spec.samples.empty()) throw std::invalid_argument("fit: no samples");

  std::map<long, std::vector<FitSample>> classes;
  for (long j = 0; j < spec.period; ++j) classes[j];
  for (const auto& s : spec.samples) classes[residue_of(s.n, spec.period)].push_back(s);

  FitResult result;
  result.provenance.period = spec.period;
  result.provenance.degree = spec.degree;
  result.provenance.sample_min = spec.samples.front().n;
  result.provenance.sample_max = spec.samples.front().n;
  for (const auto& s : spec.samples) {
    result.provenance.sample_min = std::min(result.provenance.sample_min, s.n);
    result.provenance.sample_max = std::max(result.provenance.sample_max, s.n);
  }

  const std::size_t needed = static_cast<std::size_t>(spec.degree) + 1;
  std::vector<Polynomial> branches;
  for (auto& [residue, pts] : classes) {
    std::sort(pts.begin(), pts.end(), [](const FitSample& a, const FitSample& b) { return a.n < b.n; });
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].n == pts[i - 1].n) throw std::invalid_argument("fit: duplicate sample n = " + std::to_string(pts[i].n));
    if (pts.size() < needed + static_cast<std::size_t>(spec.verification_points)) {
      throw std::invalid_argument("fit: residue " + std::to_string(residue) + " has " + std::to_string(pts.size()) +
                                  " samples; degree " + std::to_string(spec.degree) + " with " +
                                  std::to_string(spec.verification_points) + " verification points needs " +
                                  std::to_string(needed + static_cast<std::size_t>(spec.verification_points)));
    }
    const std::vector<FitSample> defining(pts.begin(), pts.begin() + static_cast<long>(needed));
    Polynomial branch(symbol, solve_vandermonde(defining));
    branch.set_symbol(symbol);
    for (const auto& d : defining) result.provenance.interpolation_points.push_back(d.n);
    for (std::size_t i = needed; i < pts.size(); ++i) {
      if (branch.eval(Rational(pts[i].n)) != pts[i].value) {
        throw VerificationError("fit: residue " + std::to_string(residue) + " fails verification at n = " +
                                    std::to_string(pts[i].n),
                                static_cast<int>(residue), pts[i].n);
      }
      result.provenance.verification_points.push_back(pts[i].n);
    }
    branches.push_back(std::move(branch));
  }
  std::sort(result.provenance.interpolation_points.begin(), result.provenance.interpolation_points.end());
  std::sort(result.provenance.verification_points.begin(), result.provenance.verification_points.end());
  result.formula = QuasiPolynomial(std::move(branches));
  return result;
}

LeadingTermEstimate fit_leading_term(std::span<const FitSample> data, int degree) {
  if (data.size() < 3) throw std::invalid_argument("fit_leading_term needs at least 3 points");
  if (degree < 0) throw std::invalid_argument("fit_leading_term: negative degree");
  std::vector<FitSample> pts(data.begin(), data.end());
  std::sort(pts.begin(), pts.end(), [](const FitSample& a, const FitSample& b) { return a.n < b.n; });
  std::vector<Rational> h;
  std::vector<Rational> y;
  for (const auto& p : pts) {
    if (p.n <= 0) throw std::invalid_argument("fit_leading_term needs positive n");
    h.push_back(make_rational(1, p.n));
    y.push_back(p.value / ipow(Rational(p.n), degree));
  }
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].n == pts[i - 1].n) throw std::invalid_argument("fit_leading_term: duplicate n");

  // Neville at h = 0 over the last m points, m = 2..size.
  LeadingTermEstimate out;
  out.degree = degree;
  const std::size_t size = pts.size();
  for (std::size_t m = 2; m <= size; ++m) {
    std::vector<Rational> t(y.end() - static_cast<long>(m), y.end());
    const std::size_t base = size - m;
    for (std::size_t level = 1; level < m; ++level) {
      for (std::size_t i = 0; i + level < m; ++i) {
        const Rational& hi = h[base + i];
        const Rational& hj = h[base + i + level];
        t[i] = (hj * t[i] - hi * t[i + 1]) / (hj - hi);
      }
    }
    out.extrapolants.push_back(t[0]);
  }
  out.estimate = out.extrapolants.back();
  const std::size_t e = out.extrapolants.size();
  if (e >= 3) {
    const Rational d1 = abs(out.extrapolants[e - 1] - out.extrapolants[e - 2]);
    const Rational d2 = abs(out.extrapolants[e - 2] - out.extrapolants[e - 3]);
    out.converged = d1 <= d2;
  } else {
    out.converged = true;
  }
  return out;
}

}  // namespace momentforge
