#pragma once

#include <complex>

namespace eiskern::nonhol {

using cd = std::complex<double>;

// Non-holomorphic double Eisenstein series
// sum over pairs gamma, delta in Gamma_inf\Gamma with gamma delta^{-1} not in Gamma_inf of
// Im(gamma z)^s Im(delta z)^{s'} / |c_{gamma delta^{-1}}|^w, both cosets cut at Im >= 1/H^2.
struct DirectSum {
  cd z, w, s, sp;
  double H = 0;
  cd value;
  double err = 0;  // |S(H) - S(H/2)|
  long cosets = 0;
  long pairs = 0;
  double worst_pair_ratio = 0;  // max |c| (Im gamma z Im delta z)^{1/2}; at most 1
};

// Domain Re(s), Re(s') > 1, Re(w) > 2 - 2 Re(s), 2 - 2 Re(s'); OutOfDomain otherwise.
// Every pair is checked against |c_{gamma delta^{-1}}| <= (Im gamma z Im delta z)^{-1/2}.
DirectSum nonhol_dbl_eis_direct(cd z, cd w, cd s, cd sp, double H = 12);

// Second route: with s_in the exponent of smaller real part and s_out the other,
// zeta(w+2 s_in) E = sum_{gamma} Im(gamma z)^{s+s'} sum_{n >= 1} n^{-w} xi_Z(n gamma z, s_in).
// Needs Re(s_out) > Re(s_in) > 1/2 and Re(w + 2 s_in) > 2; OutOfDomain otherwise.
DirectSum nonhol_dbl_eis_rearranged(cd z, cd w, cd s, cd sp, double H = 24);

// zeta(w+2s) zeta(w+2s') E(z,w;s,s') = sum_{n >= 1} T_n K(z;s,s') / n^{w+s+s'-1/2},
// from unfolding: zeta(w+2s) E = sum_gamma Im(gamma z)^{s+s'} sum_n n^{-w} xi_Z(n gamma z, s).
// The normalisation (1/2) sum T_n K / n^{w-1/2} is reported alongside as rhs_alt; it does not match.
struct HeckeRelation {
  cd z, w, s, sp;
  long M = 0;
  cd lhs;  // zeta(w+2s) zeta(w+2s') E(z,w;s,s'), rearranged route
  double lhs_err = 0;
  cd lhs_pairs;  // same, from the pair sum
  double lhs_pairs_err = 0;
  cd rhs, rhs_alt;
  cd factor_alt;  // rhs_alt / lhs
  double residual_alt = 0, residual = 0;  // relative to |lhs|
  double last_term_alt = 0, last_term = 0;
};
HeckeRelation hecke_relation_check(cd z, cd w, cd s, cd sp, long M, double H_pairs = 12, double H_kernel = 12);

// Partial sums of sum_{m >= 1} phi(m,s) m^{-w} with theta(s) phi(m,s) = sigma_{2s-1}(m) m^{1/2-s}.
struct DivisorIdentity {
  cd s, w;
  long M = 0;
  cd partial;
  cd one_sided;    // pi^s zeta(w+s-1/2) zeta(w-s+1/2) / (Gamma(s) zeta(2s))
  cd two_sided;    // 2 pi^s ... : the value of the sum over m != 0
  double tail_bound = 0;
};
DivisorIdentity divisor_identity(cd s, cd w, long M);

}  // namespace eiskern::nonhol
