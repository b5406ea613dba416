#include "eiskern/mpcore/complex.hpp"

#include <algorithm>

#include "eiskern/error.hpp"

namespace eiskern::mp {

namespace {

void require_finite(const Real& re, const Real& im) {
  if (!re.is_finite() || !im.is_finite()) throw OutOfDomain("non-finite complex value");
}

}  // namespace

Complex::Complex(Bits prec) : re_(prec), im_(prec) {}

Complex::Complex(const Real& re) : re_(re), im_(re.prec()) { require_finite(re_, im_); }

Complex::Complex(const Real& re, const Real& im)
    : re_(re.with_prec(std::min(re.prec(), im.prec()))),
      im_(im.with_prec(std::min(re.prec(), im.prec()))) {
  require_finite(re_, im_);
}

Complex::Complex(double re, double im, Bits prec) : re_(re, prec), im_(im, prec) {
  require_finite(re_, im_);
}

Complex Complex::i(Bits prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

Complex Complex::polar(const Real& modulus, const Real& angle) {
  Real c(angle.prec()), s(angle.prec());
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return Complex(modulus * c, modulus * s);
}

Complex Complex::unit(const Real& t) {
  Real c(t.prec()), s(t.prec());
  Real a = 2L * pi(t.prec()) * t;
  mpfr_sin_cos(s.get(), c.get(), a.get(), MPFR_RNDN);
  return Complex(c, s);
}

Complex Complex::with_prec(Bits prec) const { return Complex(re_.with_prec(prec), im_.with_prec(prec)); }

std::string Complex::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ", " + im_.to_string(digits) + ")";
}

Complex& Complex::operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
Complex& Complex::operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

Complex& Complex::operator*=(const Complex& o) {
  Real t(prec());
  mpfr_mul(t.get(), re_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_fma(t.get(), im_.get(), o.re_.get(), t.get(), MPFR_RNDN);
  Real u(prec());
  mpfr_mul(u.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_fms(re_.get(), re_.get(), o.re_.get(), u.get(), MPFR_RNDN);
  im_ = std::move(t);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = norm(o);
  if (d.is_zero()) throw OutOfDomain("complex division by zero");
  *this *= conj(o);
  re_ /= d;
  im_ /= d;
  return *this;
}

Complex& Complex::operator+=(const Real& o) { re_ += o; return *this; }
Complex& Complex::operator-=(const Real& o) { re_ -= o; return *this; }
Complex& Complex::operator*=(const Real& o) { re_ *= o; im_ *= o; return *this; }
Complex& Complex::operator/=(const Real& o) { re_ /= o; im_ /= o; return *this; }
Complex& Complex::operator*=(long v) { re_ *= v; im_ *= v; return *this; }
Complex& Complex::operator/=(long v) { re_ /= v; im_ /= v; return *this; }

Complex Complex::operator-() const { return Complex(-re_, -im_); }

namespace {
Complex at_min(const Complex& a, const Complex& b) {
  return a.prec() <= b.prec() ? a : a.with_prec(b.prec());
}
}  // namespace

Complex operator+(const Complex& a, const Complex& b) { Complex r = at_min(a, b); r += b; return r; }
Complex operator-(const Complex& a, const Complex& b) { Complex r = at_min(a, b); r -= b; return r; }
Complex operator*(const Complex& a, const Complex& b) { Complex r = at_min(a, b); r *= b; return r; }
Complex operator/(const Complex& a, const Complex& b) { Complex r = at_min(a, b); r /= b; return r; }
Complex operator+(const Complex& a, const Real& b) { Complex r(a); r += b; return r; }
Complex operator-(const Complex& a, const Real& b) { Complex r(a); r -= b; return r; }
Complex operator*(const Complex& a, const Real& b) { Complex r(a); r *= b; return r; }
Complex operator/(const Complex& a, const Real& b) { Complex r(a); r /= b; return r; }
Complex operator*(const Real& a, const Complex& b) { Complex r(b); r *= a; return r; }
Complex operator+(const Real& a, const Complex& b) { Complex r(b); r += a; return r; }
Complex operator-(const Real& a, const Complex& b) { Complex r = -b; r += a; return r; }
Complex operator+(const Complex& a, long b) { Complex r(a); r.re() += b; return r; }
Complex operator-(const Complex& a, long b) { Complex r(a); r.re() -= b; return r; }
Complex operator*(const Complex& a, long b) { Complex r(a); r *= b; return r; }
Complex operator/(const Complex& a, long b) { Complex r(a); r /= b; return r; }
Complex operator-(long a, const Complex& b) { Complex r = -b; r.re() += a; return r; }
Complex operator*(long a, const Complex& b) { Complex r(b); r *= a; return r; }

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real norm(const Complex& z) {
  Real r(z.prec());
  mpfr_sqr(r.get(), z.re().get(), MPFR_RNDN);
  mpfr_fma(r.get(), z.im().get(), z.im().get(), r.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  if (z.im().is_zero() && z.re().sign() < 0) return pi(z.prec());
  return atan2(z.im(), z.re());
}

Complex exp(const Complex& z) { return Complex::polar(exp(z.re()), z.im()); }

Complex log(const Complex& z) {
  if (z.is_zero()) throw OutOfDomain("log of zero");
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Complex h = log(z);
  h /= 2L;
  return exp(h);
}

Complex sin(const Complex& z) {
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  return Complex(s * cosh(z.im()), c * sinh(z.im()));
}

Complex cos(const Complex& z) {
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  return Complex(c * cosh(z.im()), -(s * sinh(z.im())));
}

Complex cpow(const Complex& z, const Complex& s) {
  if (z.is_zero()) {
    if (s.re().sign() > 0) return Complex(std::min(z.prec(), s.prec()));
    throw OutOfDomain("0^s with Re(s) <= 0");
  }
  if (s.is_real() && z.is_real() && z.re().sign() > 0) return Complex(pow(z.re(), s.re()));
  return exp(s * log(z));
}

Complex cpow(const Real& x, const Complex& s) { return cpow(Complex(x), s); }

Complex ipow(const Complex& z, long n) {
  if (n < 0) return Complex(1L, z.prec()) / ipow(z, -n);
  Complex result(1L, z.prec());
  Complex base(z);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Real dist(const Complex& a, const Complex& b) { return abs(a - b); }

}  // namespace eiskern::mp
