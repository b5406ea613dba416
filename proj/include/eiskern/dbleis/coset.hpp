#pragma once

#include <complex>
#include <vector>

namespace eiskern::dbleis {

// Representative of B\Gamma modulo +-I: bottom row (c, d) with c > 0, or (0, 1).
// (a, b) is the solution of ad - bc = 1 with a in (-c/2, c/2].
struct Coset {
  long a, b, c, d;
  std::complex<double> j;   // c z + d
  std::complex<double> gz;  // gamma z
  double radius;            // |c z + d| / sqrt(Im z) = Im(gamma z)^{-1/2}
};

// All cosets with Im(gamma z) >= 1/H^2, ordered by radius then (c, d).
std::vector<Coset> enumerate_cosets(std::complex<double> z, double H);

}  // namespace eiskern::dbleis
