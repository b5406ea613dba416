#pragma once

#include <vector>

#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/real.hpp"

namespace eiskern::mp {

// Exact Bernoulli number with B_1 = -1/2.
BigRational bernoulli(unsigned long n);

std::vector<unsigned long> divisors(unsigned long m);
// sum_{d | m} d^x, exact for integer x.
BigRational divisor_sigma(long x, unsigned long m);
Complex divisor_sigma(const Complex& x, unsigned long m);

// Results carry the precision of the (smallest-precision) argument.
Complex zeta(const Complex& s);
Real zeta(const Real& s);
Complex gamma(const Complex& s);
Real gamma(const Real& s);
// Analytic continuation of log Gamma, real on the positive axis.
Complex log_gamma(const Complex& s);
// 1/Gamma(s); zero at the non-positive integers.
Complex rgamma(const Complex& s);
// Gamma(s, x) = int_x^infty t^{s-1} e^{-t} dt.
Complex inc_gamma_upper(const Complex& s, const Real& x);
Real inc_gamma_upper(const Real& s, const Real& x);
// gamma(s, x) = int_0^x t^{s-1} e^{-t} dt, Re(s) > 0.
Complex inc_gamma_lower(const Complex& s, const Real& x);
// K_nu(x) for x > 0.
Complex bessel_k(const Complex& nu, const Real& x);
// pi^{-s} Gamma(s) zeta(2s)
Complex theta(const Complex& s);

// Lipschitz sum sum_n (tau+n)^{-s}, Re(s) > 1, via the exponential-sum form.
// Throws NonConvergence if more than max_terms are needed.
Complex lipschitz_sum(const Complex& tau, const Complex& s, long max_terms = 100000);

// sup_n d(n) / n^eps for 0 < eps, computed exactly as a product over primes.
double divisor_constant(double eps);

// K_nu(x) for a fixed order at many arguments x in [xmin, xmax], sharing quadrature nodes.
class BesselKTable {
 public:
  BesselKTable(const Complex& nu, const Real& xmin, const Real& xmax);
  Complex operator()(const Real& x) const;
  Bits prec() const { return prec_; }

 private:
  Bits prec_, work_;
  Real h_;
  std::vector<Real> cosh_t_;
  std::vector<Complex> cosh_nu_t_;
};

}  // namespace eiskern::mp
