#include <cmath>

#include "eiskern/dbleis/coset.hpp"
#include "eiskern/dbleis/dbleis.hpp"
#include "eiskern/dbleis/fastmath.hpp"
#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::dbleis {

using fast::cd;

namespace {

constexpr mp::Bits kOut = 64;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(cd z) { return "[" + fmt(z.real()) + "," + fmt(z.imag()) + "]"; }

cd check_z(const Complex& z) {
  cd zz = fast::to_cd(z);
  if (!(zz.imag() > 0)) throw OutOfDomain("point evaluation needs Im z > 0");
  return zz;
}

// j^{-k} for even k, by repeated multiplication.
cd inv_pow(cd j, int k) {
  cd r = 1.0, b = 1.0 / j;
  for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
    if (e & 1U) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

KernelPointValue cohen_kernel_eval(const Complex& z, int k, const Complex& s, const BigRational& twist, long H) {
  if (k % 2 || k < 4) throw BadWeight("Cohen kernel needs even k >= 4");
  cd zz = check_z(z), ss = fast::to_cd(s);
  if (!(ss.real() > 1.0 && ss.real() < k - 1.0)) throw OutOfDomain("Cohen kernel needs 1 < Re(s) < k-1");
  double x = twist.to_double();
  fast::Lipschitz lip(ss);
  auto cosets = enumerate_cosets(zz, static_cast<double>(H));
  cd full = 0.0, half = 0.0;
  for (const auto& g : cosets) {
    cd term = inv_pow(g.j, k) * lip(g.gz + x);
    full += term;
    if (g.radius <= H / 2.0) half += term;
  }
  KernelPointValue out;
  out.z = z;
  out.params = {{"k", std::to_string(k)}, {"s", fmt(ss)}, {"twist", twist.to_string()}};
  out.value = fast::from_cd(full, kOut);
  out.H = H;
  out.err_est = mp::Real(std::abs(full - half) + 1e-14 * std::abs(full), kOut);
  return out;
}

DblEisPoint dbl_eis_point_eval(const Complex& z, int k, const Complex& s, const Complex& w, long H, long M_n) {
  if (k % 2 || k < 6) throw BadWeight("double Eisenstein point evaluation needs even k >= 6");
  cd zz = check_z(z), ss = fast::to_cd(s), ww = fast::to_cd(w);
  double sig = ss.real(), rw = ww.real();
  if (!(sig > 2.0 && sig < k - 2.0 && rw < sig - 1.0 && rw < k - 1.0 - sig))
    throw OutOfDomain("need 2 < Re(s) < k-2 and Re(w) < Re(s)-1, k-1-Re(s)");
  if (M_n < 1) throw OutOfDomain("M_n must be positive");
  fast::Lipschitz lip(ss);
  auto cosets = enumerate_cosets(zz, static_cast<double>(H));
  // sum_{b<a} C_k(z, s; b/a) = a^s sum_cosets j^{-k} L(a gamma z, s).
  cd full = 0.0, half = 0.0, last = 0.0;
  std::vector<cd> jk(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) jk[i] = inv_pow(cosets[i].j, k);
  for (long a = 1; a <= M_n; ++a) {
    double ad = static_cast<double>(a);
    cd inner = 0.0, inner_half = 0.0;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      cd t = jk[i] * lip(ad * cosets[i].gz);
      inner += t;
      if (cosets[i].radius <= H / 2.0) inner_half += t;
    }
    cd scale = fast::cpow(cd(ad, 0), ww - 1.0);
    full += scale * inner;
    half += scale * inner_half;
    last = scale * inner;
  }
  // zeta(1-w+s) E = 2 sum_a a^{w-s-1} sum_b C_k(z, s; b/a)
  mp::Bits p = 96;
  Complex sm = fast::from_cd(ss, p), wm = fast::from_cd(ww, p);
  Complex zeta1 = mp::zeta(1L - wm + sm);
  cd raw = 2.0 * full / fast::to_cd(zeta1);
  cd raw_half = 2.0 * half / fast::to_cd(zeta1);
  double a_decay = k / 2.0 + 0.5 - rw;
  double a_tail = a_decay > 1.0 ? std::abs(2.0 * last / fast::to_cd(zeta1)) * M_n / (a_decay - 1.0)
                                : INFINITY;
  double err = std::abs(raw - raw_half) + a_tail + 1e-14 * std::abs(raw);

  Complex kk(static_cast<long>(k), p);
  Complex factor = mp::exp(Complex(mp::Real(0L, p), mp::pi(p) / 2L) * sm) * mp::gamma(sm) * mp::gamma(kk - sm) *
                   mp::gamma(kk - wm) * zeta1 * mp::zeta(1L - wm + kk - sm) /
                   (mp::cpow(mp::Real(2L, p), 3L - wm) * mp::cpow(mp::pi(p), kk + 1L - wm) *
                    mp::gamma(mp::Real(static_cast<long>(k - 1), p)));
  cd fc = fast::to_cd(factor);

  DblEisPoint out;
  out.raw.z = z;
  out.raw.params = {{"k", std::to_string(k)}, {"s", fmt(ss)}, {"w", fmt(ww)}, {"M_n", std::to_string(M_n)}};
  out.raw.value = fast::from_cd(raw, kOut);
  out.raw.H = H;
  out.raw.err_est = mp::Real(err, kOut);
  out.completed = out.raw;
  out.completed.value = fast::from_cd(fc * raw, kOut);
  out.completed.err_est = mp::Real(std::abs(fc) * err, kOut);
  return out;
}

}  // namespace eiskern::dbleis
