#include "eiskern/nonhol/fast.hpp"

#include <cmath>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::nonhol::fast {

namespace {

cd to_cd(const mp::Complex& z) { return {z.re().to_double(), z.im().to_double()}; }
mp::Complex from_cd(cd z) { return mp::Complex(z.real(), z.imag(), 96); }
cd cpow(double b, cd s) { return std::exp(s * std::log(b)); }

const std::vector<double>& bernoulli_over_factorial() {
  static const std::vector<double> b = [] {
    std::vector<double> out;
    for (int j = 1; j <= 10; ++j)
      out.push_back((mp::bernoulli(static_cast<unsigned long>(2 * j)) / mp::factorial(2 * j)).to_double());
    return out;
  }();
  return b;
}

cd sigma(cd x, long m) {
  cd acc = 0.0;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    acc += cpow(static_cast<double>(d), x);
    if (d * d != m) acc += cpow(static_cast<double>(m / d), x);
  }
  return acc;
}

}  // namespace

cd reduce(cd z) {
  if (!(z.imag() > 0)) throw OutOfDomain("point must lie in the upper half plane");
  for (int it = 0; it < 10000; ++it) {
    z -= std::round(z.real());
    if (std::norm(z) >= 1.0 - 1e-15) return z;
    z = -1.0 / z;
  }
  throw NonConvergence("fundamental domain reduction did not terminate");
}

BesselK::BesselK(cd nu, double xmin, double xmax) : nu_(nu) {
  if (!(xmin > 0) || !(xmax >= xmin)) throw OutOfDomain("BesselK needs 0 < xmin <= xmax");
  // Strip-width bound pi^2/L and the saddle-width bound pi sqrt(2/(x L)), L = 42 (about 1e-18).
  h_cap_ = M_PI * M_PI / (42.0 + M_PI * std::fabs(nu.imag()));
  h_ = std::min(h_cap_, M_PI * std::sqrt(2.0 / (xmax * 42.0)));
  double a = std::fabs(nu.real());
  for (int j = 0;; ++j) {
    double t = j * h_;
    cosh_t_.push_back(std::cosh(t));
    cosh_nu_t_.push_back(std::cosh(nu * t));
    if (xmin * std::cosh(t) - a * t > 50.0 + std::log1p(a)) break;
  }
}

cd BesselK::operator()(double x) const {
  if (!(x > 0)) throw OutOfDomain("BesselK needs x > 0");
  double want = std::min(h_cap_, M_PI * std::sqrt(2.0 / (x * 42.0)));
  std::size_t stride = std::max<std::size_t>(1, static_cast<std::size_t>(want / h_));
  double a = std::fabs(nu_.real());
  cd acc = 0.5 * cosh_nu_t_[0] * std::exp(-x);
  double peak = std::abs(acc);
  for (std::size_t j = stride; j < cosh_t_.size(); j += stride) {
    double e = std::exp(-x * cosh_t_[j]);
    cd v = cosh_nu_t_[j] * e;
    acc += v;
    double mag = std::abs(v);
    peak = std::max(peak, mag);
    if (mag < 1e-19 * peak && x * std::sinh(j * h_) > a) break;
  }
  return acc * (h_ * static_cast<double>(stride));
}

cd hurwitz(cd s, double a) {
  if (!(a > 0) || !(s.real() > 1.0)) throw OutOfDomain("hurwitz needs a > 0 and Re(s) > 1");
  cd acc = 0.0;
  if (s.real() > 30.0) {
    for (int n = 0; n < 100000; ++n) {
      cd t = cpow(a + n, -s);
      acc += t;
      if (std::abs(t) < 1e-19 * std::abs(acc)) return acc;
    }
    throw NonConvergence("hurwitz direct sum");
  }
  int shift = static_cast<int>(std::ceil(std::max(0.0, 10.0 + std::abs(s) - a)));
  for (int n = 0; n < shift; ++n) acc += cpow(a + n, -s);
  double b = a + shift;
  cd pb = cpow(b, -s);
  acc += b * pb / (s - 1.0) + 0.5 * pb;
  cd poch = s;
  cd pw = pb / b;
  const auto& bern = bernoulli_over_factorial();
  for (std::size_t j = 0; j < bern.size(); ++j) {
    cd term = bern[j] * poch * pw;
    acc += term;
    if (std::abs(term) < 1e-19 * std::abs(acc)) break;
    double r = 2.0 * j + 1.0;
    poch *= (s + r) * (s + r + 1.0);
    pw /= b * b;
  }
  return acc;
}

XiDirect::XiDirect(cd s) : s_(s) {
  if (!(s.real() > 0.5)) throw OutOfDomain("xi_Z needs Re(s) > 1/2");
  binom_.push_back(1.0);
  for (int k = 1; k < 200; ++k) binom_.push_back(binom_.back() * (-s - static_cast<double>(k - 1)) / static_cast<double>(k));
}

cd XiDirect::operator()(cd tau) const {
  double X = tau.real() - std::round(tau.real()), Y = tau.imag();
  if (!(Y > 0)) throw OutOfDomain("xi_Z needs Im(tau) > 0");
  int N = 6 + static_cast<int>(std::ceil(2.0 * Y));
  cd acc = 0.0;
  for (int n = -N; n <= N; ++n) acc += std::exp(-s_ * std::log((X + n) * (X + n) + Y * Y));
  double y2 = Y * Y;
  double p = 1.0;
  for (std::size_t k = 0; k < binom_.size(); ++k) {
    cd e = 2.0 * s_ + 2.0 * static_cast<double>(k);
    cd term = binom_[k] * p * (hurwitz(e, N + 1 + X) + hurwitz(e, N + 1 - X));
    acc += term;
    if (std::abs(term) < 1e-19 * std::abs(acc)) return acc;
    p *= y2;
  }
  throw NonConvergence("xi_Z binomial tail");
}

XiSharp::XiSharp(cd s) : s_(s), k_(s - 0.5, 2.0 * M_PI * 0.2), direct_(s) {
  mp::Complex sm = from_cd(s);
  mp::Complex rg = mp::rgamma(sm);
  c0_ = to_cd(mp::sqrt(mp::Complex(mp::pi(96))) * mp::gamma(sm - mp::Complex(0.5, 0.0, 96)) * rg);
  c1_ = to_cd(2L * mp::cpow(mp::pi(96), sm) * rg);
}

cd XiSharp::operator()(cd tau) const {
  double X = tau.real(), Y = tau.imag();
  if (!(Y > 0)) throw OutOfDomain("xi# needs Im(tau) > 0");
  if (Y < 0.2) {
    cd z = direct_(tau) - c0_ * cpow(Y, 1.0 - 2.0 * s_);
    return z * cpow(Y, s_ - 0.5) / c1_;
  }
  cd acc = 0.0;
  double first = 0.0;
  for (int m = 1; m < 100000; ++m) {
    cd t = cpow(m, s_ - 0.5) * k_(2.0 * M_PI * m * Y);
    if (m == 1) first = std::abs(t);
    acc += t * 2.0 * std::cos(2.0 * M_PI * m * X);
    if (std::abs(t) < 1e-19 * std::max(first, std::abs(acc)) && 2.0 * M_PI * m * Y > std::abs(s_)) return acc;
  }
  throw NonConvergence("xi# Bessel series");
}

Eisenstein::Eisenstein(cd s) : s_(s), k_(s - 0.5, 2.0 * M_PI * 0.85) {
  mp::Complex sm = from_cd(s);
  mp::Complex th = mp::theta(sm);
  ratio_ = to_cd(mp::theta(mp::Complex(1L, 96) - sm) / th);
  inv_theta_ = to_cd(mp::Complex(1L, 96) / th);
}

cd Eisenstein::operator()(cd z) const {
  z = reduce(z);
  double x = z.real(), y = z.imag();
  cd acc = cpow(y, s_) + ratio_ * cpow(y, 1.0 - s_);
  cd series = 0.0;
  double first = 0.0;
  for (long m = 1; m < 10000; ++m) {
    cd phi = sigma(2.0 * s_ - 1.0, m) * cpow(static_cast<double>(m), 0.5 - s_);
    cd t = phi * 2.0 * std::sqrt(y) * k_(2.0 * M_PI * m * y);
    if (m == 1) first = std::abs(t);
    series += t * 2.0 * std::cos(2.0 * M_PI * m * x);
    if (std::abs(t) < 1e-19 * std::max(first, std::abs(acc)) && 2.0 * M_PI * m * y > std::abs(s_)) break;
  }
  return acc + inv_theta_ * series;
}

}  // namespace eiskern::nonhol::fast
