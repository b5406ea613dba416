#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eiskern/lfunc/lvalue.hpp"
#include "eiskern/lfunc/petersson.hpp"
#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

namespace eiskern::dbleis {

using mp::BigRational;
using mp::Complex;
using mp::Real;

// Fourier coefficients n = 1..N_q of the completed double Eisenstein series
// sum_f L*(f, s) L*(f, w) f / <f, f>, or its twisted variant
// sum_f L*(f, k-s; p/q) L*(f, k-w) f / <f, f>.
struct DblEisCoeffs {
  int k = 0;
  Complex s, w;
  BigRational twist;
  bool twisted = false;
  bool empty = false;  // dim S_k = 0: the vector is identically zero
  std::vector<Complex> coeffs;  // coeffs[n-1] = a(n)
  Real err_est;
  std::string method = "spectral";

  // Spectral parameters of the matching product of non-holomorphic Eisenstein series.
  Complex u() const;
  Complex v() const;
  const Complex& operator()(long n) const { return coeffs.at(static_cast<std::size_t>(n - 1)); }
  // sum_n a(n) e^{2 pi i n z}
  Complex evaluate(const Complex& z) const;
};

DblEisCoeffs dbl_eis_coeffs(int k, const Complex& s, const Complex& w, const PrecisionProfile& prof);
DblEisCoeffs twisted_dbl_eis_coeffs(int k, const Complex& s, const Complex& w, const BigRational& twist,
                                    const PrecisionProfile& prof);

// Max over n <= N_q of |n! [E_k1, E_k2]_n / (2 pi i)^n - c E*_{k1+n, k2+n}(., n+1)|.
Real rc_identity_residual(int k1, int k2, unsigned n, const PrecisionProfile& prof);

struct KernelReport {
  Complex lhs, rhs;
  Real residual;
  Real bound;
};

// <[E_k1, E_k2]_n, f> / (2 pi i)^n against the kernel formula, with <f, f> by quadrature.
KernelReport zagier_kernel_residual(int k1, int k2, unsigned n, const lfunc::HeckeEigenform& f,
                                    const PrecisionProfile& prof);

struct KernelPointValue {
  Complex z;
  std::vector<std::pair<std::string, std::string>> params;
  Complex value;
  long H = 0;
  Real err_est;
};

// (1/2) sum_{gamma in Gamma} (gamma z + p/q)^{-s} j(gamma, z)^{-k}, cosets with Im(gamma z) >= 1/H^2.
KernelPointValue cohen_kernel_eval(const Complex& z, int k, const Complex& s, const BigRational& twist, long H);

struct DblEisPoint {
  KernelPointValue raw;        // E_{s,k-s}(z, w)
  KernelPointValue completed;  // E*_{s,k-s}(z, w)
};

// Hecke-sum evaluation of E_{s,k-s}(z, w) with a <= M_n, and its completion.
DblEisPoint dbl_eis_point_eval(const Complex& z, int k, const Complex& s, const Complex& w, long H, long M_n);

struct HeckeActionReport {
  Real lhs, rhs, residual, bound;
  long A_max = 0;
};

// (2 pi)^{k-w}/Gamma(k-w) L*(f,s) L*(f,w) against
// zeta(k+1-s-w) sum_{a <= A} a^{w-s-1} sum_{b < a} L*(f, k-s; b/a), real s, w.
HeckeActionReport hecke_action_identity_residual(const lfunc::HeckeEigenform& f, const Real& s, const Real& w,
                                                 long A_max, const PrecisionProfile& prof);

// (1/2) sum_{B\Gamma} e(m gamma z) j(gamma, z)^{-k}.
KernelPointValue poincare_point_eval(const Complex& z, int k, long m, long H);

// sum over gamma, delta in B\Gamma with c_{gamma delta^{-1}} > 0 of
// c^{w-1} e(m1 gamma z + m2 delta z) j(gamma,z)^{-k1} j(delta,z)^{-k2}.
// Integer w >= 1 uses the binomial factorisation of the determinant; other w sum pairs directly.
KernelPointValue dbl_poincare_point_eval(const Complex& z, int k1, int k2, const Complex& w, long m1, long m2,
                                         long H);
// Pairwise summation over the same truncation, asserting c_{gamma delta^{-1}} <= Im(gamma z)^{-1/2} Im(delta z)^{-1/2}.
KernelPointValue dbl_poincare_direct(const Complex& z, int k1, int k2, const Complex& w, long m1, long m2, long H);

struct PoincareBracketReport {
  Complex lhs;     // [P_k1(.;m1), P_k2(.;m2)]_n at z
  Complex rhs;     // double Poincare and Poincare combination
  Real residual;   // |lhs - rhs|
  Real scale;      // largest magnitude among the individual terms
  Real err_est;    // truncation estimate of both sides
};

PoincareBracketReport poincare_bracket_check(const Complex& z, int k1, int k2, unsigned n, long m1, long m2, long H);

}  // namespace eiskern::dbleis
