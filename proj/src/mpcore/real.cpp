#include "eiskern/mpcore/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "eiskern/error.hpp"

namespace eiskern::mp {

namespace {

std::partial_ordering from_cmp(int c, bool unordered) {
  if (unordered) return std::partial_ordering::unordered;
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Bits clamp_prec(Bits p) { return std::max<Bits>(p, MPFR_PREC_MIN); }

}  // namespace

Real::Real(Bits prec) {
  mpfr_init2(x_, clamp_prec(prec));
  mpfr_set_zero(x_, 1);
}

Real::Real(long v, Bits prec) {
  mpfr_init2(x_, clamp_prec(prec));
  mpfr_set_si(x_, v, MPFR_RNDN);
}

Real::Real(double v, Bits prec) {
  mpfr_init2(x_, clamp_prec(prec));
  mpfr_set_d(x_, v, MPFR_RNDN);
}

Real::Real(const BigRational& q, Bits prec) {
  mpfr_init2(x_, clamp_prec(prec));
  mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const BigInt& z, Bits prec) {
  mpfr_init2(x_, clamp_prec(prec));
  mpfr_set_z(x_, z.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, Bits prec) {
  Real r(prec);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.x_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0')
    throw BadData("not a decimal literal: '" + s + "'");
  if (!r.is_finite()) throw BadData("non-finite literal: '" + s + "'");
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  // Steal the limbs; the source becomes an empty shell that must not be read.
  x_[0] = o.x_[0];
  o.live_ = false;
}

Real& Real::operator=(const Real& o) {
  if (this == &o) return *this;
  if (!live_) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    live_ = true;
  } else if (mpfr_get_prec(x_) != mpfr_get_prec(o.x_)) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
  }
  mpfr_set(x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this == &o) return *this;
  if (live_) mpfr_clear(x_);
  x_[0] = o.x_[0];
  live_ = o.live_;
  o.live_ = false;
  return *this;
}

Real::~Real() {
  if (live_) mpfr_clear(x_);
}

void Real::set_prec(Bits prec) { mpfr_prec_round(x_, clamp_prec(prec), MPFR_RNDN); }

Real Real::with_prec(Bits prec) const {
  Real r(prec);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(x_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (digits <= 0) digits = static_cast<int>(mpfr_get_str_ndigits(10, prec()));
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, x_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }
Real& Real::operator+=(long v) { mpfr_add_si(x_, x_, v, MPFR_RNDN); return *this; }
Real& Real::operator-=(long v) { mpfr_sub_si(x_, x_, v, MPFR_RNDN); return *this; }
Real& Real::operator*=(long v) { mpfr_mul_si(x_, x_, v, MPFR_RNDN); return *this; }
Real& Real::operator/=(long v) { mpfr_div_si(x_, x_, v, MPFR_RNDN); return *this; }

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::min(a.prec(), b.prec()));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(std::min(a.prec(), b.prec()));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(std::min(a.prec(), b.prec()));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(std::min(a.prec(), b.prec()));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  bool un = mpfr_unordered_p(a.x_, b.x_) != 0;
  return from_cmp(un ? 0 : mpfr_cmp(a.x_, b.x_), un);
}
std::partial_ordering operator<=>(const Real& a, long b) {
  bool un = mpfr_nan_p(a.x_) != 0;
  return from_cmp(un ? 0 : mpfr_cmp_si(a.x_, b), un);
}
std::partial_ordering operator<=>(const Real& a, double b) {
  bool un = mpfr_nan_p(a.x_) != 0;
  return from_cmp(un ? 0 : mpfr_cmp_d(a.x_, b), un);
}

Real operator+(const Real& a, long b) { Real r(a); r += b; return r; }
Real operator-(const Real& a, long b) { Real r(a); r -= b; return r; }
Real operator*(const Real& a, long b) { Real r(a); r *= b; return r; }
Real operator/(const Real& a, long b) { Real r(a); r /= b; return r; }
Real operator+(long a, const Real& b) { Real r(b); r += a; return r; }
Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { Real r(b); r *= a; return r; }
Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

#define EISKERN_UNARY(name, fn)            \
  Real name(const Real& x) {               \
    Real r(x.prec());                      \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }

EISKERN_UNARY(abs, mpfr_abs)
EISKERN_UNARY(sqrt, mpfr_sqrt)
EISKERN_UNARY(exp, mpfr_exp)
EISKERN_UNARY(expm1, mpfr_expm1)
EISKERN_UNARY(log, mpfr_log)
EISKERN_UNARY(log1p, mpfr_log1p)
EISKERN_UNARY(sin, mpfr_sin)
EISKERN_UNARY(cos, mpfr_cos)
EISKERN_UNARY(sinh, mpfr_sinh)
EISKERN_UNARY(cosh, mpfr_cosh)
#undef EISKERN_UNARY

Real pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real log2_const(Bits prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::min(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::min(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.prec());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x.prec());
  mpfr_round(r.get(), x.get());
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::min(x.prec(), y.prec()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real exp2i(long e, Bits prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigInt round_to_int(const Real& x) {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
  return z;
}

}  // namespace eiskern::mp
