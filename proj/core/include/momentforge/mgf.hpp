#pragma once

// Numeric moment-generating-function limits: G_n(e^(t/sigma)) against e^(t^2/2).

#include <span>
#include <string>
#include <vector>

#include "momentforge/real.hpp"

namespace momentforge {

struct MgfRow {
  double t = 0;
  Real value;
  Real target;
  Real deviation;
};

struct MgfReport {
  std::string family;
  long n = 0;
  unsigned digits10 = 0;
  std::vector<MgfRow> rows;
  Real max_deviation;
};

/// family "invmaj": prod_{i=1}^n sinh(i x)/(i sinh x), sigma^2 = n(n-1)(2n+5)/72.
/// family "board1n": cosh(x)^(n-1), sigma^2 = (n-1)/4. In both x = t/(2 sigma).
/// Requires n >= 2.
MgfReport mgf_limit_check(const std::string& family, long n, std::span<const double> t_grid, unsigned digits10 = 50);

/// Evenly spaced grid of `points` values over [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace momentforge
