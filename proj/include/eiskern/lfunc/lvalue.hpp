#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eiskern/modforms/eigenform.hpp"
#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

namespace eiskern::lfunc {

using modforms::HeckeEigenform;
using mp::BigRational;
using mp::Complex;
using mp::Real;

struct LValue {
  std::string form;
  Complex s;
  BigRational twist;  // p/q reduced into [0, 1)
  Complex value;
  Real err_est;
};

// Number of coefficients needed for twists with denominator q at this profile.
long coefficients_needed(int k, const Complex& s, long q, const PrecisionProfile& prof);

// L*(f, s) = int_0^infty f(iy) y^{s-1} dy.
LValue lstar(const HeckeEigenform& f, const Complex& s, const PrecisionProfile& prof);

// L*(f, s; p/q) = int_0^infty f(iy + p/q) y^{s-1} dy.
LValue lstar_twisted(const HeckeEigenform& f, const Complex& s, const BigRational& twist,
                     const PrecisionProfile& prof);

// Twisted values for a fixed (f, s, q) and varying p, sharing the incomplete-gamma terms.
class TwistedLSeries {
 public:
  // With all_divisors, every p mod q is accepted (the fraction is reduced first);
  // otherwise p must be coprime to q.
  TwistedLSeries(const HeckeEigenform& f, const Complex& s, long q, const PrecisionProfile& prof,
                 bool all_divisors = false);
  LValue operator()(long p) const;
  long q() const { return q_; }

 private:
  struct Level {
    long q = 1;
    std::vector<Complex> upper;    // Gamma(s, 2 pi m/q) (2 pi m)^{-s}
    std::vector<Complex> lower;    // eps q^{k-2s} Gamma(k-s, 2 pi m/q) (2 pi m)^{s-k}
    std::vector<Complex> roots;    // e(j/q)
    Real err;
  };
  const Level& level(long q) const;

  const HeckeEigenform* f_;
  Complex s_;
  long q_;
  PrecisionProfile prof_;
  std::vector<std::unique_ptr<Level>> levels_;  // indexed by divisor of q
  std::vector<long> level_q_;
};

}  // namespace eiskern::lfunc
