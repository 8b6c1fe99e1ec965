#pragma once

// Quasi-polynomial ansatz: exact interpolation per residue class with
// mandatory held-out verification, and leading-coefficient extrapolation.

#include <span>
#include <string>
#include <vector>

#include "momentforge/errors.hpp"
#include "momentforge/quasi_polynomial.hpp"

namespace momentforge {

struct FitSample {
  long n = 0;
  Rational value;
};

struct FitSpec {
  int period = 1;
  int degree = 0;
  std::vector<FitSample> samples;
  int verification_points = 3;  // minimum held-out points per residue class
};

/// The hypotheses and data a fit rests on.
struct FitProvenance {
  int period = 1;
  int degree = 0;
  long sample_min = 0;
  long sample_max = 0;
  std::vector<long> interpolation_points;
  std::vector<long> verification_points;
};

struct FitResult {
  QuasiPolynomial formula;
  FitProvenance provenance;
};

/// For each residue j mod period, the degree+1 smallest sample points define
/// the branch by an exact fraction-free solve; every remaining point of the
/// class must reproduce exactly. Throws std::invalid_argument when a class has
/// fewer than degree+1+verification_points samples (or duplicate n), and
/// VerificationError naming the residue and point on a mismatch.
FitResult fit_quasi_polynomial(const FitSpec& spec, const std::string& symbol = "n");

struct LeadingTermEstimate {
  int degree = 0;
  Rational estimate;                  // extrapolated coefficient of n^degree
  std::vector<Rational> extrapolants;  // Neville values using the last 2, 3, ... points
  bool converged = false;
};

/// Richardson-style estimate of lim value(n)/n^degree: exact Neville
/// extrapolation in h = 1/n to h = 0 over the points sorted by n. Exact for
/// polynomial data of degree <= degree with enough points. converged is set
/// when successive extrapolant changes shrink over the last three steps.
/// Needs at least 3 points.
LeadingTermEstimate fit_leading_term(std::span<const FitSample> data, int degree);

}  // namespace momentforge
