#pragma once

#include <vector>

#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"

namespace eiskern::mp {

using CMatrix = std::vector<std::vector<Complex>>;
using QMatrix = std::vector<std::vector<BigRational>>;
// Polynomials are stored with ascending coefficients.
using QPoly = std::vector<BigRational>;

// Gaussian elimination with partial pivoting; throws SingularSystem.
std::vector<Complex> solve(CMatrix a, std::vector<Complex> b);

// Characteristic polynomial det(x I - A), monic, exact (Faddeev-LeVerrier).
QPoly charpoly(const QMatrix& a);
QPoly poly_derivative(const QPoly& p);
QPoly poly_gcd(QPoly a, QPoly b);
// Degree of the polynomial with trailing zeros ignored (-1 for zero).
long poly_degree(const QPoly& p);

// All complex roots of a rational polynomial at the given precision
// (Weierstrass iteration followed by Newton polishing).
std::vector<Complex> poly_roots(const QPoly& p, Bits prec);

}  // namespace eiskern::mp
