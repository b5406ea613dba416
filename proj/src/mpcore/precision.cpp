#include "eiskern/mpcore/precision.hpp"

#include <cmath>

#include "eiskern/error.hpp"

namespace eiskern {

long tail_for_bits(long bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits) * std::log(2.0) / (2.0 * M_PI))) + 1;
}

PrecisionProfile PrecisionProfile::with_bits(long bits) {
  PrecisionProfile p;
  p.P = bits;
  return p.normalized();
}

PrecisionProfile PrecisionProfile::normalized() const {
  PrecisionProfile p = *this;
  if (p.P < 64) throw InsufficientPrecision("precision must be at least 64 bits");
  if (p.N_q <= 0 || p.H_group <= 0 || p.M_tail < 0 || p.tol_bits < 0)
    throw OutOfDomain("profile fields must be positive");
  if (p.M_tail == 0) p.M_tail = tail_for_bits(p.P + 16);
  if (p.tol_bits == 0) p.tol_bits = p.P / 2;
  if (p.tol_bits > p.P - 12) throw InsufficientPrecision("tolerance finer than 2^(12-P)");
  return p;
}

double PrecisionProfile::tol_double() const { return std::ldexp(1.0, static_cast<int>(-tol_bits)); }

std::string PrecisionProfile::tol_string() const { return tol().to_string(6); }

}  // namespace eiskern
