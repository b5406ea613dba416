#include "eiskern/lfunc/lvalue.hpp"

#include <cmath>
#include <numeric>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::lfunc {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// log of an upper bound for Gamma(a, x), or +inf when the bound does not apply yet.
double log_gamma_upper_bound(double a, double x) {
  if (a <= 1.0) return (a - 1.0) * std::log(x) - x;
  if (x <= 2.0 * (a - 1.0)) return INFINITY;
  return (a - 1.0) * std::log(x) - x - std::log(1.0 - (a - 1.0) / x);
}

// Rigorous bound (Deligne) for the m-th term of the twisted series.
double log_term_bound(int k, double sigma, long q, long m) {
  double lm = std::log(static_cast<double>(m));
  double x = 2.0 * M_PI * m / q;
  double lx = std::log(2.0 * M_PI * m);
  double coeff = std::log(2.0) + 0.5 * lm + 0.5 * (k - 1) * lm;
  double up = log_gamma_upper_bound(sigma, x) - sigma * lx;
  double lo = (k - 2.0 * sigma) * std::log(static_cast<double>(q)) + log_gamma_upper_bound(k - sigma, x) -
              (k - sigma) * lx;
  double mx = std::max(up, lo);
  return coeff + mx + std::log1p(std::exp(std::min(up, lo) - mx));
}

double tail_bound(int k, double sigma, long q, long m_last) {
  double acc = 0.0;
  for (long m = m_last + 1; m <= m_last + 400; ++m) {
    double lb = log_term_bound(k, sigma, q, m);
    if (!std::isfinite(lb)) return INFINITY;
    acc += std::exp(lb);
  }
  return acc;
}

long choose_terms(int k, double sigma, long q, const PrecisionProfile& prof, double* err) {
  double target = std::ldexp(1.0, static_cast<int>(-(prof.P + 8)));
  long m = q * prof.M_tail;
  for (;; m += q) {
    double t = tail_bound(k, sigma, q, m);
    if (t < target) {
      *err = t;
      return m;
    }
    if (m > 400000) throw NonConvergence("L-series tail bound not reached");
  }
}

long inverse_mod(long p, long q) {
  if (q == 1) return 0;
  long t = 0, nt = 1, r = q, nr = ((p % q) + q) % q;
  while (nr != 0) {
    long quo = r / nr;
    long tmp = t - quo * nt;
    t = nt;
    nt = tmp;
    tmp = r - quo * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw OutOfDomain("p and q are not coprime");
  return ((t % q) + q) % q;
}

mp::Bits working_bits(const Complex& s, const PrecisionProfile& prof) {
  double t = std::fabs(s.im().to_double());
  return prof.work() + static_cast<mp::Bits>(t * M_PI / 2.0 / kLn2);
}

}  // namespace

long coefficients_needed(int k, const Complex& s, long q, const PrecisionProfile& prof) {
  double err = 0;
  double sigma = s.re().to_double();
  // The bound is applied to both s and k - s so the count is symmetric.
  return std::max(choose_terms(k, sigma, q, prof, &err), choose_terms(k, k - sigma, q, prof, &err));
}

TwistedLSeries::TwistedLSeries(const HeckeEigenform& f, const Complex& s, long q, const PrecisionProfile& prof,
                               bool all_divisors)
    : f_(&f), s_(s), q_(q), prof_(prof) {
  if (q < 1) throw OutOfDomain("twist denominator must be positive");
  for (long d = all_divisors ? 1 : q; d <= q; ++d) {
    if (q % d) continue;
    level_q_.push_back(d);
    auto lv = std::make_unique<Level>();
    lv->q = d;
    int k = f.weight;
    mp::Bits wp = working_bits(s, prof);
    Complex sw = s.with_prec(wp);
    long m_max = coefficients_needed(k, s, d, prof);
    double err = tail_bound(k, sw.re().to_double(), d, m_max);
    if (f.order() < m_max)
      throw InsufficientPrecision("eigenform " + f.label() + " has " + std::to_string(f.order()) +
                                  " coefficients, twist by 1/" + std::to_string(d) + " needs " +
                                  std::to_string(m_max));
    Real two_pi = 2L * mp::pi(wp);
    Complex ksw = Complex(Real(static_cast<long>(k), wp)) - sw;
    Complex refl = mp::cpow(Real(d, wp), Complex(Real(static_cast<long>(k), wp)) - 2L * sw);
    if ((k / 2) % 2) refl = -refl;
    Real mag_sum(0L, wp);
    for (long m = 1; m <= m_max; ++m) {
      Real x = two_pi * m / d;
      Real tm = two_pi * m;
      Complex u = mp::inc_gamma_upper(sw, x) * mp::cpow(tm, -sw);
      Complex l = refl * mp::inc_gamma_upper(ksw, x) * mp::cpow(tm, -ksw);
      Real am = mp::abs(f.a(m).re());
      mag_sum += am * (mp::abs(u) + mp::abs(l));
      lv->upper.push_back(std::move(u));
      lv->lower.push_back(std::move(l));
    }
    for (long j = 0; j < d; ++j) lv->roots.push_back(Complex::unit(Real(BigRational(j, d), wp)));
    lv->err = Real(err, wp) + mag_sum * mp::exp2i(-(wp - 8), wp);
    levels_.push_back(std::move(lv));
  }
}

const TwistedLSeries::Level& TwistedLSeries::level(long q) const {
  for (std::size_t i = 0; i < level_q_.size(); ++i)
    if (level_q_[i] == q) return *levels_[i];
  throw OutOfDomain("twist denominator does not divide the series denominator");
}

LValue TwistedLSeries::operator()(long p) const {
  long pr = ((p % q_) + q_) % q_;
  long g = std::gcd(pr, q_);
  long num = pr / g, den = q_ / g;
  if (pr == 0) {
    num = 0;
    den = 1;
  }
  const Level& lv = level(den);
  long pinv = inverse_mod(num, den);
  Complex acc(lv.upper.empty() ? s_.prec() : lv.upper[0].prec());
  for (std::size_t i = 0; i < lv.upper.size(); ++i) {
    long m = static_cast<long>(i) + 1;
    const Complex& e_plus = lv.roots[static_cast<std::size_t>((m * num) % den)];
    const Complex& e_minus = lv.roots[static_cast<std::size_t>((den - (m * pinv) % den) % den)];
    Complex term = e_plus * lv.upper[i] + e_minus * lv.lower[i];
    term *= f_->a(m).re();
    acc += term;
  }
  LValue out{f_->label(), s_, BigRational(num, den), acc.with_prec(prof_.P), lv.err.with_prec(prof_.P)};
  if (out.err_est > prof_.tol()) throw NonConvergence("L-value error estimate exceeds tolerance");
  return out;
}

LValue lstar(const HeckeEigenform& f, const Complex& s, const PrecisionProfile& prof) {
  return TwistedLSeries(f, s, 1, prof)(0);
}

LValue lstar_twisted(const HeckeEigenform& f, const Complex& s, const BigRational& twist,
                     const PrecisionProfile& prof) {
  mp::BigInt q = twist.den();
  if (!q.fits_slong_p() || q > 1000000) throw OutOfDomain("twist denominator too large");
  mp::BigInt p = twist.num();
  long qq = q.get_si();
  mp::BigInt pr;
  mpz_fdiv_r_ui(pr.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(qq));
  return TwistedLSeries(f, s, qq, prof)(pr.get_si());
}

}  // namespace eiskern::lfunc
