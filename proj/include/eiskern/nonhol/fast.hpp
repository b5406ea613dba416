#pragma once

#include <complex>
#include <vector>

// Double-precision kernels for the coset sums of the non-holomorphic wing.
namespace eiskern::nonhol::fast {

using cd = std::complex<double>;

// Moves z into the standard fundamental domain |x| <= 1/2, |z| >= 1.
cd reduce(cd z);

// K_nu(x) for one order at many x > 0: trapezoid rule on int_0^inf e^{-x cosh t} cosh(nu t) dt.
// Nodes are laid out for xmax; smaller x use every stride-th node.
class BesselK {
 public:
  explicit BesselK(cd nu, double xmin = 0.5, double xmax = 400.0);
  cd operator()(double x) const;
  cd nu() const { return nu_; }

 private:
  cd nu_;
  double h_, h_cap_;
  std::vector<double> cosh_t_;
  std::vector<cd> cosh_nu_t_;
};

// Hurwitz zeta sum_{n>=0} (a+n)^{-s}, a > 0, Re(s) > 1.
cd hurwitz(cd s, double a);

// xi_Z(tau, s) = sum_n |tau + n|^{-2s}, Re(s) > 1/2, summed directly with a binomial-Hurwitz tail.
class XiDirect {
 public:
  explicit XiDirect(cd s);
  cd operator()(cd tau) const;

 private:
  cd s_;
  std::vector<cd> binom_;  // binom(-s, k)
};

// xi#(tau, s) = sum_{m != 0} |m|^{s-1/2} K_{s-1/2}(2 pi |m| Y) e(m X), Re(s) > 1/2.
// Bessel series for Y >= 0.2, otherwise from xi_Z minus its Poisson zero mode.
class XiSharp {
 public:
  explicit XiSharp(cd s);
  cd operator()(cd tau) const;
  cd s() const { return s_; }
  // pi^{1/2} Gamma(s - 1/2) / Gamma(s) and 2 pi^s / Gamma(s)
  cd zero_mode() const { return c0_; }
  cd poisson() const { return c1_; }

 private:
  cd s_, c0_, c1_;
  BesselK k_;
  XiDirect direct_;
};

// E(z, s) from its Fourier expansion after reduction to the fundamental domain.
class Eisenstein {
 public:
  explicit Eisenstein(cd s);
  cd operator()(cd z) const;

 private:
  cd s_, ratio_, inv_theta_;  // theta(1-s)/theta(s), 1/theta(s)
  BesselK k_;
};

}  // namespace eiskern::nonhol::fast
