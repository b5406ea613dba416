#pragma once

#include <random>
#include <string>

#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/real.hpp"

namespace testsupport {

using eiskern::mp::Bits;
using eiskern::mp::Complex;
using eiskern::mp::Real;

inline Real tol_bits(long bits, Bits prec) { return eiskern::mp::exp2i(-bits, prec); }

inline bool close_abs(const Complex& a, const Complex& b, const Real& tol) {
  return eiskern::mp::abs(a - b) <= tol;
}

inline bool close_rel(const Complex& a, const Complex& b, const Real& tol) {
  Real scale = eiskern::mp::max(eiskern::mp::abs(a), eiskern::mp::abs(b));
  if (scale < 1L) scale = Real(1L, a.prec());
  return eiskern::mp::abs(a - b) <= tol * scale;
}

inline Complex cx(double re, double im, Bits prec) { return Complex(re, im, prec); }

inline Complex cx(const char* re, const char* im, Bits prec) {
  return Complex(Real::parse(re, prec), Real::parse(im, prec));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

}  // namespace testsupport
