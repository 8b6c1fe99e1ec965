#include "momentforge/real.hpp"

#include <ios>

namespace momentforge {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10)
    : lock_(precision_mutex()), previous_(Real::default_precision()) {
  // Guard digits so that the requested digits survive a few operations.
  Real::default_precision(digits10 + 10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

Real to_real(const Rational& q) { return Real(q.get_mpq_t()); }

std::string to_decimal(const Real& x, unsigned digits10) {
  return x.str(static_cast<std::streamsize>(digits10), std::ios::scientific);
}

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace momentforge
