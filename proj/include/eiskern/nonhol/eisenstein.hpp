#pragma once

#include <string>

#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

namespace eiskern::nonhol {

using mp::Complex;
using mp::Bits;
using mp::Real;

enum class EisensteinMethod { Fourier, Lattice };
std::string to_string(EisensteinMethod m);

struct EisensteinValue {
  Complex z, s;
  Complex value;  // E(z, s)
  EisensteinMethod method = EisensteinMethod::Fourier;
  Real err;
  long terms = 0;  // Fourier modes, or box size H for the lattice sum
};

// E(z,s) = sum over Gamma_inf\Gamma of Im(gamma z)^s.
// Fourier: constant term plus Bessel modes at the fundamental-domain image of z, full precision.
// Lattice: (y^s/2) sum over coprime (c,d) in the box |c|,|d| <= H_group, double precision,
// err is a rigorous bound on the omitted lattice points.
EisensteinValue eisenstein_nonhol(const Complex& z, const Complex& s, EisensteinMethod method,
                                  const PrecisionProfile& prof);

// theta(s) E(z,s)
EisensteinValue eisenstein_completed(const Complex& z, const Complex& s, const PrecisionProfile& prof);

// Average of E(z + j/n, s) over j = 0..n-1; for n above the Fourier cutoff this is the constant term.
Complex eisenstein_x_average(const Complex& z, const Complex& s, int n, const PrecisionProfile& prof);

}  // namespace eiskern::nonhol
