#include "momentforge/moments.hpp"

#include <algorithm>

namespace momentforge {

std::string_view to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::Raw:
      return "raw";
    case MomentKind::Central:
      return "central";
    case MomentKind::Binomial:
      return "binomial";
    case MomentKind::CentralBinomial:
      return "central-binomial";
  }
  return "unknown";
}

Rational gaussian_moment(int r) {
  if (r < 0) throw std::invalid_argument("gaussian_moment: negative order");
  if (r % 2 != 0) return Rational(0);
  const unsigned s = static_cast<unsigned>(r / 2);
  return Rational(factorial(2 * s)) / Rational(ipow(Integer(2), s) * factorial(s));
}

std::vector<Real> normalized_moments(const MomentVector<Rational>& central, unsigned digits10) {
  if (central.kind != MomentKind::Central) throw std::invalid_argument("normalized_moments expects central moments");
  if (central.r_max() < 2) throw std::invalid_argument("normalized_moments needs moments through order 2");
  const Rational& var = central[2];
  if (sgn(var) <= 0) throw std::domain_error("normalized_moments: zero variance");
  PrecisionScope scope(digits10);
  const Real sigma = sqrt(to_real(var));
  std::vector<Real> out;
  for (int r = 0; r <= central.r_max(); ++r) {
    const long half = r / 2;
    const Rational even_part = central[r] / ipow(var, half);
    Real m = to_real(even_part);
    if (r % 2 != 0) m /= sigma;
    out.push_back(std::move(m));
  }
  return out;
}

bool NormalityReport::all_converged() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.converged; });
}

const NormalityVerdict& NormalityReport::verdict(int r) const {
  for (const auto& v : verdicts)
    if (v.r == r) return v;
  throw std::out_of_range("no verdict for order " + std::to_string(r));
}

NormalityReport normality_report(std::string family, ParamMap params, std::span<const std::int64_t> grid, int r_max,
                                 const CentralMomentSource& central_at, NormalityOptions options) {
  if (grid.size() < 3) throw std::invalid_argument("normality_report: grid needs at least 3 points");
  if (r_max < 2) throw std::invalid_argument("normality_report: r_max must be at least 2");
  NormalityReport report;
  report.family = std::move(family);
  report.params = std::move(params);
  report.grid.assign(grid.begin(), grid.end());
  report.r_max = r_max;
  report.options = options;

  PrecisionScope scope(options.digits10);
  std::vector<std::vector<Real>> normalized;
  for (auto n : grid) normalized.push_back(normalized_moments(central_at(n, r_max), options.digits10));

  const Real threshold(options.threshold);
  for (int r = 1; r <= r_max; ++r) {
    const Rational target = gaussian_moment(r);
    const Real target_real = to_real(target);
    std::vector<Real> devs;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const Real& m = normalized[g][static_cast<std::size_t>(r)];
      Real dev = abs(m - target_real);
      report.rows.push_back({r, grid[g], m, target, dev});
      devs.push_back(std::move(dev));
    }
    NormalityVerdict v;
    v.r = r;
    v.final_deviation = devs.back();
    const std::size_t k = devs.size();
    v.monotone_tail = devs[k - 2] <= devs[k - 3] && devs[k - 1] <= devs[k - 2];
    v.converged = v.monotone_tail && devs.back() < threshold;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace momentforge
