#pragma once

#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/special.hpp"

namespace oracle {

using eiskern::mp::Bits;
using eiskern::mp::Complex;
using eiskern::mp::Real;

// Gamma(s, x) by exp-sinh quadrature of the defining integral.
inline Complex inc_gamma_quadrature(const Complex& s, const Real& x, double h, double tmax) {
  Bits p = s.prec();
  Complex acc(p);
  Real hp(h, p);
  Real half_pi = eiskern::mp::pi(p) / 2L;
  long n = static_cast<long>(tmax / h);
  for (long j = -n; j <= n; ++j) {
    Real tau = hp * j;
    Real u = eiskern::mp::exp(half_pi * eiskern::mp::sinh(tau));
    Real du = u * half_pi * eiskern::mp::cosh(tau);
    Real t = x + u;
    Complex v = eiskern::mp::cpow(t, s - 1L) * eiskern::mp::exp(-t);
    acc += v * du;
  }
  return acc * hp;
}

// K_nu(x) = pi/2 (I_{-nu}(x) - I_nu(x)) / sin(nu pi) from the ascending series, nu not an integer.
inline Complex bessel_k_series(const Complex& nu, const Real& x) {
  Bits p = nu.prec();
  auto bessel_i = [&](const Complex& v) {
    Real half = x / 2L;
    Real half2 = half * half;
    Complex term = eiskern::mp::cpow(half, v) * eiskern::mp::rgamma(v + 1L);
    Complex acc = term;
    for (long k = 1; k < 400; ++k) {
      term *= half2;
      term /= (v + k) * k;
      acc += term;
    }
    return acc;
  };
  Complex num = bessel_i(-nu) - bessel_i(nu);
  return num * eiskern::mp::pi(p) / (2L * eiskern::mp::sin(nu * eiskern::mp::pi(p)));
}

// sum_{|n| <= N} (tau+n)^{-s} with a midpoint-rule integral for the tail.
inline Complex lipschitz_direct(const Complex& tau, long s, long n_max) {
  Bits p = tau.prec();
  Complex acc = eiskern::mp::ipow(tau, -s);
  for (long n = 1; n <= n_max; ++n) {
    acc += eiskern::mp::ipow(tau + n, -s);
    acc += eiskern::mp::ipow(tau - n, -s);
  }
  Real edge(n_max, p);
  edge += Real(0.5, p);
  Complex a = tau + edge;
  Complex b = edge - tau;
  acc += (eiskern::mp::ipow(a, 1 - s) + eiskern::mp::ipow(b, 1 - s)) / (s - 1);
  return acc;
}

// zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12 for large N.
inline Real zeta_direct(long s, long n_max, Bits p) {
  Real acc(p);
  for (long n = 1; n < n_max; ++n) acc += eiskern::mp::pow(Real(n, p), -s);
  Real nn(n_max, p);
  acc += eiskern::mp::pow(nn, 1 - s) / (s - 1);
  acc += eiskern::mp::pow(nn, -s) / 2L;
  acc += eiskern::mp::pow(nn, -s - 1) * s / 12L;
  acc -= eiskern::mp::pow(nn, -s - 3) * (s * (s + 1) * (s + 2)) / 720L;
  return acc;
}

}  // namespace oracle
