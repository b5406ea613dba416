#pragma once

#include <complex>
#include <vector>

#include "eiskern/mpcore/complex.hpp"

// Double-precision kernels for truncated coset sums, whose truncation error
// dominates rounding by many orders of magnitude.
namespace eiskern::dbleis::fast {

using cd = std::complex<double>;

cd to_cd(const mp::Complex& z);
mp::Complex from_cd(cd z, mp::Bits prec);

// Principal branch: exp(s log(b)), arg in (-pi, pi].
inline cd cpow(cd b, cd s) { return std::exp(s * std::log(b)); }

// sum_{n in Z} (tau + n)^{-s} for Im(tau) > 0, Re(s) > 1.
class Lipschitz {
 public:
  explicit Lipschitz(cd s);
  cd operator()(cd tau) const;
  cd s() const { return s_; }

 private:
  cd exp_form(cd tau) const;
  cd em_form(cd tau) const;
  cd s_;
  cd pref_;  // (2 pi)^s e^{-i pi s/2} / Gamma(s)
  int n_;
  std::vector<double> bern_;  // B_{2j} / (2j)!
};

// Truncated Taylor series in eps around a point: c[0] + c[1] eps + ... + c[n] eps^n.
class Jet {
 public:
  explicit Jet(int order, cd value = 0.0) : c_(static_cast<std::size_t>(order) + 1, 0.0) { c_[0] = value; }
  static Jet variable(int order, cd value);
  int order() const { return static_cast<int>(c_.size()) - 1; }
  cd& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  cd operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  // j-th derivative at the expansion point.
  cd derivative(int j) const;

  Jet& operator+=(const Jet& o);
  Jet& operator*=(cd x);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(Jet a, cd x) { return a *= x; }

 private:
  std::vector<cd> c_;
};

Jet inverse(const Jet& a);
Jet exp(const Jet& a);
Jet ipow(const Jet& a, long e);  // e may be negative

}  // namespace eiskern::dbleis::fast
