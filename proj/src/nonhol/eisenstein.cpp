#include "eiskern/nonhol/eisenstein.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::nonhol {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_s(const Complex& s) {
  double a = std::hypot(s.re().to_double(), s.im().to_double());
  double b = std::hypot(s.re().to_double() - 1.0, s.im().to_double());
  if (a < 1e-8 || b < 1e-8) throw PoleNear("E(z,s) has a pole at s = 0 and s = 1");
  double c = std::hypot(s.re().to_double() - 0.5, s.im().to_double());
  if (c < 1e-8) throw OutOfDomain("theta(s) has a pole at s = 1/2; evaluate E(z,s) at a nearby s");
}

// Fundamental-domain image of z, with the translations and inversions replayed exactly.
Complex reduce_mp(const Complex& z) {
  if (z.im().sign() <= 0) throw OutOfDomain("E(z,s) needs Im z > 0");
  Bits wp = z.prec();
  Complex w = z;
  for (int it = 0; it < 10000; ++it) {
    Real n = mp::round(w.re());
    w -= n;
    if (mp::norm(w) >= Real(1L, wp)) return w;
    w = Complex(-1L, wp) / w;
  }
  throw NonConvergence("fundamental domain reduction did not terminate");
}

EisensteinValue fourier(const Complex& z_in, const Complex& s_in, const PrecisionProfile& prof) {
  Bits P = prof.P, wp = prof.work();
  Complex s = s_in.with_prec(wp);
  Complex w = reduce_mp(z_in.with_prec(wp));
  Real x = w.re(), y = w.im();
  Complex one(1L, wp);
  Complex th = mp::theta(s);
  Complex ratio = mp::theta(one - s) / th;
  Complex value = mp::cpow(y, s) + ratio * mp::cpow(y, one - s);

  double yd = y.to_double(), sig = s.re().to_double();
  double target = wp * kLn2 + 10.0;
  long M = 1;
  while (2.0 * M_PI * M * yd - (std::fabs(sig - 0.5) + 1.5) * std::log(M + 1.0) < target) ++M;
  Real two_pi_y = 2L * mp::pi(wp) * y;
  Complex nu = s - Complex(Real(0.5, wp));
  mp::BesselKTable K(nu, two_pi_y, two_pi_y * M);
  Complex series(wp);
  Real sqrt_y = mp::sqrt(y);
  Real last(wp);
  Complex two_s_minus_1 = 2L * s - one, half_minus_s = Complex(Real(0.5, wp)) - s;
  for (long m = 1; m <= M; ++m) {
    Complex phi = mp::divisor_sigma(two_s_minus_1, static_cast<unsigned long>(m)) *
                  mp::cpow(Real(m, wp), half_minus_s);
    Complex t = phi * K(two_pi_y * m) * (4L * sqrt_y);
    series += t * mp::cos(2L * mp::pi(wp) * x * m);
    last = mp::abs(t);
  }
  value += series / th;
  EisensteinValue out;
  out.z = z_in;
  out.s = s_in;
  out.value = value.with_prec(P);
  out.method = EisensteinMethod::Fourier;
  // Omitted modes decay geometrically from the last one kept.
  Real ratio_tail = mp::exp(-two_pi_y) * Real(2L, wp);
  out.err = ((last / mp::abs(th)) * ratio_tail + mp::exp2i(-P, wp) * mp::abs(value)).with_prec(P);
  out.terms = M;
  return out;
}

EisensteinValue lattice(const Complex& z_in, const Complex& s_in, const PrecisionProfile& prof) {
  double sig = s_in.re().to_double();
  if (!(sig > 1.0)) throw OutOfDomain("lattice sum for E(z,s) needs Re(s) > 1");
  using cd = std::complex<double>;
  cd z(z_in.re().to_double(), z_in.im().to_double());
  cd s(sig, s_in.im().to_double());
  double x = z.real(), y = z.imag();
  if (!(y > 0)) throw OutOfDomain("E(z,s) needs Im z > 0");
  long H = prof.H_group;
  cd acc = 0.0;
  for (long c = 0; c <= H; ++c) {
    for (long d = -H; d <= H; ++d) {
      if (c == 0 && d <= 0) continue;
      if (std::gcd(c, d) != 1) continue;
      double q = (c * x + d) * (c * x + d) + c * c * y * y;
      acc += std::exp(-s * std::log(q));
    }
  }
  // The pair (c,d) and (-c,-d) are both counted by the factor 1/2 in (y^s/2) sum.
  cd value = acc * std::exp(s * std::log(y));
  // |cz+d|^2 >= lambda (c^2 + d^2), lambda the smaller eigenvalue of [[|z|^2, x], [x, 1]].
  double tr = std::norm(z) + 1.0, det = y * y;
  double lambda = (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
  // 8r points have max-norm r, and each has c^2 + d^2 >= r^2.
  double tail = 0.5 * std::pow(y, sig) * std::pow(lambda, -sig) * 8.0 * std::pow(static_cast<double>(H), 2.0 - 2.0 * sig) /
                (2.0 * sig - 2.0);
  EisensteinValue out;
  out.z = z_in;
  out.s = s_in;
  Bits P = prof.P;
  out.value = Complex(value.real(), value.imag(), P);
  out.method = EisensteinMethod::Lattice;
  out.err = Real(tail + 1e-13 * std::abs(value), P);
  out.terms = H;
  return out;
}

}  // namespace

std::string to_string(EisensteinMethod m) { return m == EisensteinMethod::Fourier ? "fourier" : "lattice"; }

EisensteinValue eisenstein_nonhol(const Complex& z, const Complex& s, EisensteinMethod method,
                                  const PrecisionProfile& prof) {
  check_s(s);
  return method == EisensteinMethod::Fourier ? fourier(z, s, prof) : lattice(z, s, prof);
}

EisensteinValue eisenstein_completed(const Complex& z, const Complex& s, const PrecisionProfile& prof) {
  EisensteinValue e = eisenstein_nonhol(z, s, EisensteinMethod::Fourier, prof);
  Complex th = mp::theta(s.with_prec(prof.work()));
  e.value = (e.value * th).with_prec(prof.P);
  e.err = (e.err * mp::abs(th)).with_prec(prof.P);
  return e;
}

Complex eisenstein_x_average(const Complex& z, const Complex& s, int n, const PrecisionProfile& prof) {
  if (n < 1) throw OutOfDomain("x-average needs at least one sample");
  Bits wp = prof.work();
  Complex acc(wp);
  for (int j = 0; j < n; ++j) {
    Complex zj = z.with_prec(wp) + Complex(Real(mp::BigRational(j, n), wp));
    acc += eisenstein_nonhol(zj, s, EisensteinMethod::Fourier, prof).value;
  }
  return (acc / static_cast<long>(n)).with_prec(prof.P);
}

}  // namespace eiskern::nonhol
