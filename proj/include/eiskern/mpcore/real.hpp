#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "eiskern/mpcore/bigrational.hpp"

namespace eiskern::mp {

using Bits = mpfr_prec_t;

// Owning wrapper around an MPFR value. Binary operations between values of
// different precision produce a result at the smaller precision; compound
// assignments keep the precision of the left operand.
class Real {
 public:
  explicit Real(Bits prec = 64);
  Real(long v, Bits prec);
  Real(int v, Bits prec) : Real(static_cast<long>(v), prec) {}
  Real(double v, Bits prec);
  Real(const BigRational& q, Bits prec);
  Real(const BigInt& z, Bits prec);
  static Real parse(std::string_view text, Bits prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  Bits prec() const { return mpfr_get_prec(x_); }
  // Rounds the stored value to the new precision.
  void set_prec(Bits prec);
  Real with_prec(Bits prec) const;

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits (0 = enough to round-trip).
  std::string to_string(int digits = 0) const;

  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_integer() const { return mpfr_integer_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long v);
  Real& operator-=(long v);
  Real& operator*=(long v);
  Real& operator/=(long v);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.x_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

  friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

 private:
  mpfr_t x_;
  bool live_ = true;
};

Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

Real pi(Bits prec);
Real log2_const(Bits prec);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real hypot(const Real& x, const Real& y);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
// 2^e at the given precision.
Real exp2i(long e, Bits prec);
// Nearest BigInt to x.
BigInt round_to_int(const Real& x);

}  // namespace eiskern::mp
