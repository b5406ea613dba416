#include "eiskern/dbleis/fastmath.hpp"

#include <cmath>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::dbleis::fast {

cd to_cd(const mp::Complex& z) { return {z.re().to_double(), z.im().to_double()}; }

mp::Complex from_cd(cd z, mp::Bits prec) { return mp::Complex(z.real(), z.imag(), prec); }

Lipschitz::Lipschitz(cd s) : s_(s) {
  if (!(s.real() > 1.0)) throw OutOfDomain("Lipschitz sum needs Re(s) > 1");
  mp::Complex sm = from_cd(s, 96);
  mp::Complex two_pi_s = mp::cpow(2L * mp::pi(96), sm);
  mp::Complex rot = mp::exp(mp::Complex(mp::Real(0L, 96), -mp::pi(96) / 2L) * sm);
  pref_ = to_cd(two_pi_s * rot * mp::rgamma(sm));
  n_ = std::max(24, static_cast<int>(std::ceil(3.0 * std::abs(s))));
  for (int j = 1; j <= 8; ++j) {
    mp::BigRational b = mp::bernoulli(static_cast<unsigned long>(2 * j)) / mp::factorial(2 * j);
    bern_.push_back(b.to_double());
  }
}

cd Lipschitz::operator()(cd tau) const {
  if (!(tau.imag() > 0)) throw OutOfDomain("Lipschitz sum needs Im(tau) > 0");
  tau -= std::round(tau.real());
  return tau.imag() >= 0.4 ? exp_form(tau) : em_form(tau);
}

cd Lipschitz::exp_form(cd tau) const {
  const double two_pi = 2.0 * M_PI;
  cd q = std::exp(cd(0, two_pi) * tau);
  double aq = std::abs(q);
  cd qm = q, acc = 0.0;
  for (int m = 1; m < 100000; ++m) {
    cd term = std::exp((s_ - 1.0) * std::log(static_cast<double>(m))) * qm;
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc) && aq * (1.0 + 1.0 / m) < 0.9) break;
    qm *= q;
  }
  return pref_ * acc;
}

cd Lipschitz::em_form(cd tau) const {
  const int N = n_;
  cd acc = 0.0;
  for (int n = -N + 1; n <= N - 1; ++n) acc += cpow(tau + static_cast<double>(n), -s_);
  // Right tail g(x) = (tau + x)^{-s}, left tail h(x) = (tau - x)^{-s}, both summed over x >= N.
  cd up = tau + static_cast<double>(N), dn = tau - static_cast<double>(N);
  cd gu = cpow(up, -s_), gd = cpow(dn, -s_);
  acc += up * gu / (s_ - 1.0) - dn * gd / (s_ - 1.0);
  acc += 0.5 * (gu + gd);
  // g^{(r)}(N) = (-1)^r (s)_r (tau+N)^{-s-r}, h^{(r)}(N) = (s)_r (tau-N)^{-s-r}.
  cd poch = s_;  // (s)_1
  cd pu = gu / up, pd = gd / dn;
  for (int j = 1; j <= static_cast<int>(bern_.size()); ++j) {
    int r = 2 * j - 1;
    cd der_u = -poch * pu;  // r odd
    cd der_d = poch * pd;
    acc -= bern_[static_cast<std::size_t>(j - 1)] * (der_u + der_d);
    poch *= (s_ + static_cast<double>(r)) * (s_ + static_cast<double>(r + 1));
    pu /= up * up;
    pd /= dn * dn;
  }
  return acc;
}

Jet Jet::variable(int order, cd value) {
  Jet j(order, value);
  if (order >= 1) j[1] = 1.0;
  return j;
}

cd Jet::derivative(int j) const {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return c_.at(static_cast<std::size_t>(j)) * f;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int i = 0; i <= order(); ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

Jet& Jet::operator*=(cd x) {
  for (auto& v : c_) v *= x;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Jet inverse(const Jet& a) {
  Jet r(a.order());
  r[0] = 1.0 / a[0];
  for (int n = 1; n <= a.order(); ++n) {
    cd acc = 0.0;
    for (int i = 1; i <= n; ++i) acc += a[i] * r[n - i];
    r[n] = -acc * r[0];
  }
  return r;
}

Jet exp(const Jet& a) {
  // r' = a' r on coefficients.
  Jet r(a.order());
  r[0] = std::exp(a[0]);
  for (int n = 1; n <= a.order(); ++n) {
    cd acc = 0.0;
    for (int i = 1; i <= n; ++i) acc += static_cast<double>(i) * a[i] * r[n - i];
    r[n] = acc / static_cast<double>(n);
  }
  return r;
}

Jet ipow(const Jet& a, long e) {
  Jet base = e < 0 ? inverse(a) : a;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Jet r(a.order(), 1.0);
  while (n) {
    if (n & 1UL) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace eiskern::dbleis::fast
