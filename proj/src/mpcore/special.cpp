#include "eiskern/mpcore/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "eiskern/error.hpp"

namespace eiskern::mp {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Akiyama-Tanigawa state: after step m, a[0] = B_m with B_1 = +1/2.
struct BernoulliCache {
  std::mutex mu;
  std::vector<mpq_class> a;
  std::vector<mpq_class> b;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

double bits_of(double v) { return v > 1.0 ? std::log2(v) : 0.0; }

Real eps_bits(Bits wp) { return exp2i(-wp, wp); }

bool is_nonpositive_integer(const Complex& s) {
  return s.im().is_zero() && s.re().sign() <= 0 && s.re().is_integer();
}

// n^{-s} with real positive n.
Complex npow_neg(unsigned long n, const Complex& s) {
  Real ln = log(Real(static_cast<long>(n), s.prec()));
  return Complex::polar(exp(-(s.re() * ln)), -(s.im() * ln));
}

Complex zeta_em(const Complex& s) {
  Bits wp = s.prec();
  double as = abs(s).to_double();
  long n_terms = static_cast<long>(std::ceil(wp * 0.1673)) + static_cast<long>(std::ceil(as)) + 10;
  Complex acc(wp);
  for (long n = 1; n < n_terms; ++n) acc += npow_neg(static_cast<unsigned long>(n), s);
  Complex nms = npow_neg(static_cast<unsigned long>(n_terms), s);
  Real nr(n_terms, wp);
  acc += nms * nr / (s - 1L);
  acc += nms / 2L;
  Real eps = eps_bits(wp);
  Complex poch = s;
  Complex npow = nms / nr;  // N^{-s-1}
  Real inv_n2 = 1L / (nr * nr);
  BigInt fact = 2;  // (2j)!
  for (long j = 1;; ++j) {
    Complex term = poch * npow * Real(bernoulli(static_cast<unsigned long>(2 * j)) / BigRational(fact), wp);
    acc += term;
    if (abs(term) < eps * abs(acc)) break;
    if (j > 4 * n_terms) throw NonConvergence("zeta: Euler-Maclaurin remainder not below tolerance");
    poch *= (s + (2 * j - 1));
    poch *= (s + 2 * j);
    npow *= inv_n2;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return acc;
}

Complex log_gamma_work(const Complex& z) {
  Bits wp = z.prec();
  if (is_nonpositive_integer(z)) throw OutOfDomain("Gamma has a pole at " + z.re().to_string(6));
  double r_min = 0.12 * static_cast<double>(wp) + 2.0;
  long shift = 0;
  if (std::fabs(z.im().to_double()) < r_min)
    shift = std::max(0L, static_cast<long>(std::ceil(r_min - z.re().to_double())));
  Complex w = z + shift;
  Real half(0.5, wp);
  Complex res = (w - half) * log(w) - w + log(2L * pi(wp)) / 2L;
  Complex inv = Complex(1L, wp) / w;
  Complex inv2 = inv * inv;
  Complex cur = inv;
  Real eps = eps_bits(wp);
  for (unsigned long j = 1;; ++j) {
    BigRational c = bernoulli(2 * j) / BigRational(static_cast<long>(2 * j * (2 * j - 1)));
    Complex t = cur * Real(c, wp);
    res += t;
    if (abs(t) < eps * (abs(res) + 1L)) break;
    if (j > 4 * static_cast<unsigned long>(wp)) throw NonConvergence("log_gamma: Stirling series");
    cur *= inv2;
  }
  if (shift > 0) {
    Complex prod(1L, wp);
    double argsum = 0.0;
    for (long j = 0; j < shift; ++j) {
      Complex f = z + j;
      prod *= f;
      argsum += arg(f).to_double();
    }
    Complex lp = log(prod);
    double k = std::round((argsum - lp.im().to_double()) / (2 * M_PI));
    lp.im() += Real(static_cast<long>(k), wp) * 2L * pi(wp);
    res -= lp;
  }
  return res;
}

Bits gamma_work_prec(const Complex& s) {
  double a = abs(s).to_double() + 2.0;
  return s.prec() + 32 + static_cast<Bits>(bits_of(a * std::log(a)));
}

Complex xpow(const Real& x, const Complex& s) { return cpow(x, s); }
Real xpow(const Real& x, const Real& s) { return pow(x, s); }
Real mag(const Real& v) { return abs(v); }
Real mag(const Complex& v) { return abs(v); }
Complex lift(const Real& x, const Complex&) { return Complex(x); }
Real lift(const Real& x, const Real&) { return x; }

template <class T>
T upper_cf(const T& s, const Real& x) {
  Bits wp = x.prec();
  Real eps = eps_bits(wp);
  Real tiny = exp2i(-8 * wp, wp);
  T b = lift(x, s) - s + 1L;
  T c = lift(tiny, s);
  c = T(1L, wp) / c;
  T d = T(1L, wp) / b;
  T h = d;
  const long cap = 400000;
  for (long i = 1; i <= cap; ++i) {
    T an = (s - i) * i;
    b += lift(Real(2L, wp), s);
    d = an * d + b;
    if (mag(d) < tiny) d = lift(tiny, s);
    c = b + an / c;
    if (mag(c) < tiny) c = lift(tiny, s);
    d = T(1L, wp) / d;
    T del = d * c;
    h *= del;
    if (mag(del - 1L) < eps) return exp(-x) * xpow(x, s) * h;
  }
  throw NonConvergence("inc_gamma_upper: continued fraction did not converge");
}

template <class T>
T lower_series(const T& s, const Real& x) {
  Bits wp = x.prec();
  Real eps = eps_bits(wp);
  T term = T(1L, wp) / s;
  T sum = term;
  double xd = x.to_double();
  for (long n = 1; n < 1000000; ++n) {
    term *= x;
    term /= (s + n);
    sum += term;
    if (n > xd && mag(term) < eps * mag(sum)) return exp(-x) * xpow(x, s) * sum;
  }
  throw NonConvergence("inc_gamma_lower: series did not converge");
}

template <class T>
T inc_upper(const T& s_in, const Real& x_in, double sre, bool near_pole, double sabs) {
  if (x_in.sign() <= 0) throw OutOfDomain("inc_gamma_upper requires x > 0");
  Bits p = std::min(s_in.prec(), x_in.prec());
  Bits wp = p + 32 + static_cast<Bits>(bits_of(sabs + x_in.to_double()));
  T s = s_in.with_prec(wp);
  Real x = x_in.with_prec(wp);
  double xd = x.to_double();
  T r(wp);
  if (xd > sre + 1.0 || near_pole) {
    r = upper_cf(s, x);
  } else {
    if (sabs < 1.0) {
      wp += static_cast<Bits>(bits_of(1.0 / std::max(sabs, 1e-300)));
      s = s_in.with_prec(wp);
      x = x_in.with_prec(wp);
    }
    r = gamma(s) - lower_series(s, x);
  }
  return r.with_prec(p);
}

double nearest_pole_distance(const Complex& s) {
  double re = s.re().to_double(), im = s.im().to_double();
  double k = std::round(re);
  if (k > 0) return 1e300;
  return std::hypot(re - k, im);
}

}  // namespace

BigRational bernoulli(unsigned long n) {
  BernoulliCache& c = bernoulli_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  while (c.b.size() <= n) {
    unsigned long m = c.a.size();
    c.a.emplace_back(1, m + 1);
    for (unsigned long j = m; j >= 1; --j) {
      c.a[j - 1] = mpq_class(static_cast<unsigned long>(j)) * (c.a[j - 1] - c.a[j]);
    }
    c.b.push_back(c.a[0]);
  }
  if (n == 1) return BigRational(-1, 2);
  return BigRational(c.b[n]);
}

std::vector<unsigned long> divisors(unsigned long m) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigRational divisor_sigma(long x, unsigned long m) {
  if (m == 0) throw OutOfDomain("divisor_sigma requires m >= 1");
  BigRational acc;
  for (unsigned long d : divisors(m)) {
    BigInt dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, static_cast<unsigned long>(std::labs(x)));
    acc += x >= 0 ? BigRational(dp) : BigRational(BigInt(1), dp);
  }
  return acc;
}

Complex divisor_sigma(const Complex& x, unsigned long m) {
  if (m == 0) throw OutOfDomain("divisor_sigma requires m >= 1");
  Complex acc(x.prec());
  Complex negx = -x;
  for (unsigned long d : divisors(m)) acc += npow_neg(d, negx);
  return acc;
}

Complex zeta(const Complex& s) {
  Bits p = s.prec();
  if (abs(s - 1L) < exp2i(-p / 2, p)) throw PoleAtOne("zeta(s) with s within 2^(-P/2) of 1");
  Bits wp = p + 32 + static_cast<Bits>(bits_of(abs(s).to_double()));
  Complex z = s.with_prec(wp);
  if (z.re().sign() < 0) {
    if (z.im().is_zero() && z.re().is_integer() && (z.re().to_long() % 2 == 0)) return Complex(p);
    Complex one_minus = 1L - z;
    Complex half_pi_s = z * pi(wp) / 2L;
    Complex r = cpow(Complex(Real(2L, wp)), z) * cpow(Complex(pi(wp)), z - 1L) * sin(half_pi_s) *
                gamma(one_minus) * zeta_em(one_minus);
    return r.with_prec(p);
  }
  return zeta_em(z).with_prec(p);
}

Real zeta(const Real& s) { return zeta(Complex(s)).re(); }

Complex log_gamma(const Complex& s) {
  return log_gamma_work(s.with_prec(gamma_work_prec(s))).with_prec(s.prec());
}

Complex gamma(const Complex& s) {
  if (is_nonpositive_integer(s)) throw OutOfDomain("Gamma has a pole at " + s.re().to_string(6));
  if (s.im().is_zero()) return Complex(gamma(s.re()));
  Bits wp = gamma_work_prec(s);
  Complex z = s.with_prec(wp);
  if (z.re() < 0.5) {
    Complex r = Complex(pi(wp)) / (sin(z * pi(wp)) * exp(log_gamma_work(1L - z)));
    return r.with_prec(s.prec());
  }
  return exp(log_gamma_work(z)).with_prec(s.prec());
}

Real gamma(const Real& s) {
  if (s.sign() <= 0 && s.is_integer()) throw OutOfDomain("Gamma has a pole at " + s.to_string(6));
  Real r(s.prec());
  mpfr_gamma(r.get(), s.get(), MPFR_RNDN);
  return r;
}

Complex rgamma(const Complex& s) {
  if (is_nonpositive_integer(s)) return Complex(s.prec());
  return Complex(1L, s.prec()) / gamma(s);
}

Complex inc_gamma_upper(const Complex& s, const Real& x) {
  if (s.im().is_zero()) return Complex(inc_gamma_upper(s.re(), x));
  double dist = nearest_pole_distance(s);
  return inc_upper(s, x, s.re().to_double(), dist < 1e-6, abs(s).to_double());
}

Real inc_gamma_upper(const Real& s, const Real& x) {
  double sd = s.to_double();
  double k = std::round(sd);
  bool near_pole = k <= 0 && std::fabs(sd - k) < 1e-6;
  return inc_upper(s, x, sd, near_pole, std::fabs(sd));
}

Complex inc_gamma_lower(const Complex& s, const Real& x) {
  if (x.sign() <= 0) throw OutOfDomain("inc_gamma_lower requires x > 0");
  if (s.re().sign() <= 0) throw OutOfDomain("inc_gamma_lower requires Re(s) > 0");
  Bits p = std::min(s.prec(), x.prec());
  Bits wp = p + 32 + static_cast<Bits>(bits_of(x.to_double()));
  Complex r = lower_series(s.with_prec(wp), x.with_prec(wp));
  return r.with_prec(p);
}

namespace {

// Trapezoid sum of e^{-x cosh t} cosh(nu t) on [0, T] with step h.
struct BesselSum {
  Complex value;
  Real l1;
};

double bessel_cutoff(double nu_re_abs, double x, Bits wp) {
  double target = wp * kLn2 + 20.0;
  double t = 0.0;
  while (x * std::cosh(t) - nu_re_abs * t - x < target + std::log(1.0 + 1.0 / x)) t += 0.125;
  return t + 0.25;
}

Complex cosh_complex(const Complex& w) {
  Real s(w.prec()), c(w.prec());
  mpfr_sin_cos(s.get(), c.get(), w.im().get(), MPFR_RNDN);
  return Complex(cosh(w.re()) * c, sinh(w.re()) * s);
}

Bits bessel_work(const Complex& nu, const Real& x) {
  Bits p = std::min(nu.prec(), x.prec());
  double cancel = std::fabs(nu.im().to_double()) * M_PI / 2.0 / kLn2;
  return p + 32 + static_cast<Bits>(cancel) + static_cast<Bits>(bits_of(1.0 / x.to_double()));
}

}  // namespace

Complex bessel_k(const Complex& nu_in, const Real& x_in) {
  if (x_in.sign() <= 0) throw OutOfDomain("bessel_k requires x > 0");
  Bits p = std::min(nu_in.prec(), x_in.prec());
  Bits wp = bessel_work(nu_in, x_in);
  Complex nu = nu_in.with_prec(wp);
  Real x = x_in.with_prec(wp);
  double tmax = bessel_cutoff(std::fabs(nu.re().to_double()), x.to_double(), wp);

  auto f = [&](const Real& t) {
    return exp(-(x * cosh(t))) * cosh_complex(nu * t);
  };
  Real h(0.5, wp);
  Complex sum = f(Real(0L, wp)) / 2L;
  Real l1 = abs(sum);
  long n = static_cast<long>(std::ceil(tmax / 0.5));
  for (long j = 1; j <= n; ++j) {
    Complex v = f(h * j);
    l1 += abs(v);
    sum += v;
  }
  Complex est = sum * h;
  for (int level = 0; level < 14; ++level) {
    Real hn = h / 2L;
    Complex odd(wp);
    long m = static_cast<long>(std::ceil(tmax / hn.to_double()));
    for (long j = 1; j <= m; j += 2) {
      Complex v = f(hn * j);
      l1 += abs(v);
      odd += v;
    }
    sum += odd;
    Complex next = sum * hn;
    Real scale = l1 * hn;
    Real diff = abs(next - est);
    h = hn;
    est = next;
    if (diff < exp2i(-(wp + 4) / 2, wp) * scale) return est.with_prec(p);
  }
  throw NonConvergence("bessel_k: trapezoid refinement did not converge");
}

BesselKTable::BesselKTable(const Complex& nu, const Real& xmin, const Real& xmax)
    : prec_(std::min(nu.prec(), xmin.prec())), work_(bessel_work(nu, xmin)), h_(work_) {
  if (xmin.sign() <= 0 || xmax < xmin) throw OutOfDomain("BesselKTable requires 0 < xmin <= xmax");
  double wl = work_ * kLn2 + 10.0;
  double h1 = M_PI * M_PI / wl;
  double h2 = M_PI * std::sqrt(2.0 / (xmax.to_double() * wl));
  h_ = Real(0.85 * std::min(h1, h2), work_);
  double tmax = bessel_cutoff(std::fabs(nu.re().to_double()), xmin.to_double(), work_);
  long n = static_cast<long>(std::ceil(tmax / h_.to_double()));
  Complex nuw = nu.with_prec(work_);
  for (long j = 0; j <= n; ++j) {
    Real t = h_ * j;
    cosh_t_.push_back(cosh(t));
    cosh_nu_t_.push_back(cosh_complex(nuw * t));
  }
}

Complex BesselKTable::operator()(const Real& x_in) const {
  Real x = x_in.with_prec(work_);
  Complex sum = cosh_nu_t_[0] * exp(-x) / 2L;
  Real cutoff = exp2i(-work_ - 8, work_) * abs(sum);
  for (std::size_t j = 1; j < cosh_t_.size(); ++j) {
    Real e = exp(-(x * cosh_t_[j]));
    Complex v = cosh_nu_t_[j] * e;
    sum += v;
    if (e < cutoff && j > 4) break;
  }
  return (sum * h_).with_prec(prec_);
}

Complex theta(const Complex& s) {
  Bits p = s.prec();
  Complex z = s.with_prec(p + 16);
  // theta(s) = theta(1/2 - s) keeps Gamma away from its poles.
  if (z.re() < Real(0.25, p + 16)) z = Complex(Real(0.5, p + 16)) - z;
  return (cpow(Complex(pi(p + 16)), -z) * gamma(z) * zeta(2L * z)).with_prec(p);
}

Complex lipschitz_sum(const Complex& tau, const Complex& s, long max_terms) {
  if (tau.im().sign() <= 0) throw OutOfDomain("lipschitz_sum requires Im(tau) > 0");
  if (s.re() <= 1L) throw OutOfDomain("lipschitz_sum requires Re(s) > 1");
  Bits p = std::min(tau.prec(), s.prec());
  Bits wp = p + 32;
  Complex t = tau.with_prec(wp), sw = s.with_prec(wp);
  Complex q = Complex::unit(t.re()) * exp(-(2L * pi(wp) * t.im()));
  Real qabs = exp(-(2L * pi(wp) * t.im()));
  double sigma = sw.re().to_double();
  double y = t.im().to_double();
  double peak = (sigma - 1.0) / (2.0 * M_PI * y);
  Real eps = eps_bits(wp);
  Complex sm1 = sw - 1L;
  Complex acc(wp);
  Complex qm = q;
  for (long m = 1;; ++m) {
    if (m > max_terms) throw NonConvergence("lipschitz_sum: Im(tau) too small for the tail bound");
    Complex term = qm * npow_neg(static_cast<unsigned long>(m), -sm1);
    acc += term;
    if (m > peak) {
      double ratio = std::pow(1.0 + 1.0 / m, sigma - 1.0) * qabs.to_double();
      if (ratio < 1.0) {
        Real tail = abs(term) * Real(ratio / (1.0 - ratio), wp);
        if (tail < eps * abs(acc) || (acc.is_zero() && tail < eps)) break;
      }
    }
    qm *= q;
  }
  Complex minus_i_half_pi_s = Complex(sw.im(), -sw.re()) * pi(wp) / 2L;
  Complex pref = exp(minus_i_half_pi_s) * cpow(Complex(2L * pi(wp)), sw) * rgamma(sw);
  return (pref * acc).with_prec(p);
}

// sup_n d(n) / n^eps as the product over primes of max_a (a+1) p^{-a eps}.
double divisor_constant(double eps) {
  double c = 1.0;
  long limit = static_cast<long>(std::ceil(std::pow(2.0, 1.0 / eps)));
  for (long p = 2; p <= limit; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    double best = 1.0;
    for (int a = 1; a < 64; ++a) best = std::max(best, (a + 1) * std::pow(static_cast<double>(p), -a * eps));
    c *= best;
  }
  return c;
}

}  // namespace eiskern::mp
