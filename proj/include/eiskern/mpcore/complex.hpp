#pragma once

#include <ostream>
#include <string>

#include "eiskern/mpcore/real.hpp"

namespace eiskern::mp {

// Complex number at working precision P >= 64 bits. Construction from parts
// rejects NaN and infinities.
class Complex {
 public:
  explicit Complex(Bits prec = 64);
  explicit Complex(const Real& re);
  Complex(const Real& re, const Real& im);
  Complex(double re, double im, Bits prec);
  Complex(long re, Bits prec) : Complex(Real(re, prec)) {}
  static Complex i(Bits prec);
  static Complex polar(const Real& modulus, const Real& angle);
  // exp(2*pi*i*t)
  static Complex unit(const Real& t);

  Bits prec() const { return re_.prec(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Complex with_prec(Bits prec) const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::string to_string(int digits = 0) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator+=(const Real& o);
  Complex& operator-=(const Real& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex& operator*=(long v);
  Complex& operator/=(long v);
  Complex operator-() const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.to_string(); }

 private:
  Real re_, im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
Complex operator*(long a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
// z^s = |z|^s e^{i arg(z) s} with the principal argument. All complex powers go through here.
Complex cpow(const Complex& z, const Complex& s);
Complex cpow(const Real& x, const Complex& s);
// Exact integer power by repeated squaring.
Complex ipow(const Complex& z, long n);
// max(|re(a-b)|, |im(a-b)|) scaled as an absolute distance |a-b|.
Real dist(const Complex& a, const Complex& b);

}  // namespace eiskern::mp
