#pragma once

// Arbitrary-precision reals for the few quantities that leave exact
// arithmetic: odd normalized moments (a square root) and MGF evaluations.

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

#include "momentforge/exact.hpp"

namespace momentforge {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Sets the working precision (decimal digits) for the lifetime of the scope.
/// MPFR's default precision is process-wide, so scopes are serialized through
/// a recursive mutex; nested scopes on one thread are fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
};

Real to_real(const Rational& q);
/// Scientific notation with the given significant digits.
std::string to_decimal(const Real& x, unsigned digits10);
double to_double(const Real& x);

}  // namespace momentforge
