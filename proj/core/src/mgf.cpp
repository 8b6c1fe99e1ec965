#include "momentforge/mgf.hpp"

#include <stdexcept>

namespace momentforge {

MgfReport mgf_limit_check(const std::string& family, long n, std::span<const double> t_grid, unsigned digits10) {
  if (n < 2) throw std::invalid_argument("mgf_limit_check: n must be at least 2");
  if (family != "invmaj" && family != "board1n") {
    throw std::invalid_argument("mgf_limit_check: family must be invmaj or board1n, got '" + family + "'");
  }
  PrecisionScope scope(digits10);
  MgfReport report;
  report.family = family;
  report.n = n;
  report.digits10 = digits10;
  report.max_deviation = 0;
  const Real big_n(n);
  const Real variance = family == "invmaj" ? big_n * (big_n - 1) * (2 * big_n + 5) / 72 : (big_n - 1) / 4;
  const Real sigma = sqrt(variance);
  for (double t : t_grid) {
    MgfRow row;
    row.t = t;
    const Real x = Real(t) / (2 * sigma);
    if (t == 0) {
      row.value = 1;
    } else if (family == "invmaj") {
      const Real base = sinh(x);
      Real acc = 1;
      for (long i = 2; i <= n; ++i) acc *= sinh(Real(i) * x) / (Real(i) * base);
      row.value = acc;
    } else {
      row.value = pow(cosh(x), Real(n - 1));
    }
    row.target = exp(Real(t) * Real(t) / 2);
    row.deviation = abs(row.value - row.target);
    if (row.deviation > report.max_deviation) report.max_deviation = row.deviation;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("linear_grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) grid.push_back(lo + (hi - lo) * i / (points - 1));
  return grid;
}

}  // namespace momentforge
