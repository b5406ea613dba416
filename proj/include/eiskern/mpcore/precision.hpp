#pragma once

#include <string>

#include "eiskern/mpcore/real.hpp"

namespace eiskern {

// Numeric knobs shared by every computation. `tol` is stored as a base-2
// exponent: the acceptance tolerance is 2^{-tol_bits}.
struct PrecisionProfile {
  long P = 256;
  long N_q = 64;
  long M_tail = 0;  // 0 selects the smallest M with e^{-2 pi M} < 2^{-P}
  long H_group = 200;
  long tol_bits = 0;  // 0 selects P/2

  static PrecisionProfile defaults() { return PrecisionProfile{}.normalized(); }
  static PrecisionProfile with_bits(long bits);

  // Fills derived fields and validates; throws InsufficientPrecision / OutOfDomain.
  PrecisionProfile normalized() const;
  // Working precision for internal computation.
  mp::Bits work() const { return P + guard_bits(); }
  long guard_bits() const { return 32 + P / 8; }
  mp::Real tol() const { return mp::exp2i(-tol_bits, work()); }
  double tol_double() const;
  std::string tol_string() const;

  friend bool operator==(const PrecisionProfile&, const PrecisionProfile&) = default;
};

// Smallest M with e^{-2 pi M} < 2^{-bits}.
long tail_for_bits(long bits);

}  // namespace eiskern
