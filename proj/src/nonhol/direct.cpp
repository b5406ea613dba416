#include "eiskern/nonhol/direct.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "eiskern/dbleis/coset.hpp"
#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"
#include "eiskern/nonhol/fast.hpp"
#include "eiskern/nonhol/kernel.hpp"

namespace eiskern::nonhol {

namespace {

cd cpow(double b, cd s) { return std::exp(s * std::log(b)); }
cd to_cd(const mp::Complex& z) { return {z.re().to_double(), z.im().to_double()}; }
mp::Complex from_cd(cd z) { return mp::Complex(z.real(), z.imag(), 96); }
cd zeta(cd s) { return to_cd(mp::zeta(from_cd(s))); }

}  // namespace

DirectSum nonhol_dbl_eis_direct(cd z, cd w, cd s, cd sp, double H) {
  if (!(s.real() > 1.0) || !(sp.real() > 1.0))
    throw OutOfDomain("the double series needs Re(s), Re(s') > 1");
  if (!(w.real() > 2.0 - 2.0 * s.real()) || !(w.real() > 2.0 - 2.0 * sp.real()))
    throw OutOfDomain("the double series needs Re(w) > 2 - 2 Re(s) and Re(w) > 2 - 2 Re(s')");
  DirectSum out;
  out.z = z;
  out.w = w;
  out.s = s;
  out.sp = sp;
  out.H = H;
  auto cosets = dbleis::enumerate_cosets(z, H);
  std::size_t n = cosets.size();
  std::vector<cd> a(n), b(n);
  std::vector<double> im(n);
  for (std::size_t i = 0; i < n; ++i) {
    im[i] = 1.0 / (cosets[i].radius * cosets[i].radius);
    a[i] = cpow(im[i], s);
    b[i] = cpow(im[i], sp);
  }
  std::vector<cd> det_pow(1, 0.0);
  cd full = 0.0, half = 0.0;
  long pairs = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    bool hi = cosets[i].radius <= H / 2.0;
    cd row = 0.0, row_half = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long det = std::labs(cosets[i].c * cosets[j].d - cosets[i].d * cosets[j].c);
      double ratio = static_cast<double>(det) * std::sqrt(im[i] * im[j]);
      worst = std::max(worst, ratio);
      if (ratio > 1.0 + 1e-9) throw std::logic_error("coset pair violates |c| <= (Im gamma z Im delta z)^{-1/2}");
      while (det_pow.size() <= static_cast<std::size_t>(det))
        det_pow.push_back(cpow(static_cast<double>(det_pow.size()), -w));
      cd t = b[j] * det_pow[static_cast<std::size_t>(det)];
      row += t;
      if (hi && cosets[j].radius <= H / 2.0) row_half += t;
      ++pairs;
    }
    full += a[i] * row;
    half += a[i] * row_half;
  }
  out.value = full;
  out.err = std::abs(full - half) + 1e-14 * std::abs(full);
  out.cosets = static_cast<long>(n);
  out.pairs = pairs;
  out.worst_pair_ratio = worst;
  return out;
}

DirectSum nonhol_dbl_eis_rearranged(cd z, cd w, cd s, cd sp, double H) {
  bool swap = sp.real() < s.real();
  cd in = swap ? sp : s, outer = swap ? s : sp;
  if (!(in.real() > 0.5)) throw OutOfDomain("the rearranged sum needs Re(s), Re(s') > 1/2");
  if (!(outer.real() > in.real())) throw OutOfDomain("the rearranged sum needs Re(s) != Re(s')");
  if (!(w.real() + 2.0 * in.real() > 2.0)) throw OutOfDomain("the rearranged sum needs Re(w) + 2 min(Re s, Re s') > 2");
  DirectSum out;
  out.z = z;
  out.w = w;
  out.s = s;
  out.sp = sp;
  out.H = H;
  fast::XiDirect xi(in);
  fast::XiSharp xs(in);
  cd tail_exp = w + 2.0 * in - 1.0;
  // For n Y >= 8 the non-constant Fourier modes of xi_Z(n tau) are below e^{-50}.
  auto inner = [&](cd tau) {
    double Y = tau.imag();
    cd acc = 0.0;
    for (long n = 1;; ++n) {
      double nd = static_cast<double>(n);
      if (nd * Y >= 8.0) {
        acc += xs.zero_mode() * cpow(Y, 1.0 - 2.0 * in) * fast::hurwitz(tail_exp, nd);
        return acc;
      }
      cd t = cpow(nd, -w) * xi(nd * tau);
      acc += t;
      if (n > 8 && std::abs(t) < 1e-18 * std::abs(acc)) return acc;
      if (n > 10000000) throw NonConvergence("rearranged inner sum");
    }
  };
  auto cosets = dbleis::enumerate_cosets(z, H);
  cd full = 0.0, half = 0.0;
  for (const auto& c : cosets) {
    cd t = cpow(c.gz.imag(), s + sp) * inner(c.gz);
    full += t;
    if (c.radius <= H / 2.0) half += t;
  }
  cd zi = zeta(w + 2.0 * in);
  out.value = full / zi;
  out.err = std::abs(full - half) / std::abs(zi) + 1e-14 * std::abs(out.value);
  out.cosets = static_cast<long>(cosets.size());
  return out;
}

HeckeRelation hecke_relation_check(cd z, cd w, cd s, cd sp, long M, double H_pairs, double H_kernel) {
  if (M < 1) throw OutOfDomain("the Hecke sum needs M >= 1");
  HeckeRelation out;
  out.z = z;
  out.w = w;
  out.s = s;
  out.sp = sp;
  out.M = M;
  cd zz = zeta(w + 2.0 * s) * zeta(w + 2.0 * sp);
  DirectSum r = nonhol_dbl_eis_rearranged(z, w, s, sp, 2.0 * H_pairs);
  out.lhs = zz * r.value;
  out.lhs_err = std::abs(zz) * r.err;
  DirectSum e = nonhol_dbl_eis_direct(z, w, s, sp, H_pairs);
  out.lhs_pairs = zz * e.value;
  out.lhs_pairs_err = std::abs(zz) * e.err;
  auto K = [&](cd u) { return kernel_K(u, s, sp, H_kernel).value; };
  cd alt = 0.0, main = 0.0;
  for (long m = 1; m <= M; ++m) {
    cd t = hecke_apply(m, z, K);
    double md = static_cast<double>(m);
    cd tp = t * cpow(md, 0.5 - w) / 2.0;
    cd td = t * cpow(md, 0.5 - w - s - sp);
    alt += tp;
    main += td;
    if (m == M) {
      out.last_term_alt = std::abs(tp);
      out.last_term = std::abs(td);
    }
  }
  out.rhs_alt = alt;
  out.rhs = main;
  out.factor_alt = alt / out.lhs;
  out.residual_alt = std::abs(alt - out.lhs) / std::abs(out.lhs);
  out.residual = std::abs(main - out.lhs) / std::abs(out.lhs);
  return out;
}

DivisorIdentity divisor_identity(cd s, cd w, long M) {
  double sig = s.real();
  double a = 0.5 + std::fabs(sig - 0.5) - w.real();
  if (!(a < -1.0)) throw OutOfDomain("divisor identity check needs Re(w) > 3/2 + |Re(s) - 1/2|");
  if (M < 1) throw OutOfDomain("partial sum needs M >= 1");
  mp::Complex sm = from_cd(s), wm = from_cd(w);
  mp::Complex half(0.5, 0.0, 96);
  cd inv_theta = to_cd(mp::Complex(1L, 96) / mp::theta(sm));
  cd partial = 0.0;
  for (long m = 1; m <= M; ++m) {
    cd sigma = 0.0;
    for (long d = 1; d * d <= m; ++d) {
      if (m % d) continue;
      sigma += cpow(static_cast<double>(d), 2.0 * s - 1.0);
      if (d * d != m) sigma += cpow(static_cast<double>(m / d), 2.0 * s - 1.0);
    }
    partial += sigma * cpow(static_cast<double>(m), 0.5 - s - w);
  }
  DivisorIdentity out;
  out.s = s;
  out.w = w;
  out.M = M;
  out.partial = partial * inv_theta;
  mp::Complex one_sided = mp::cpow(mp::pi(96), sm) * mp::rgamma(sm) * mp::zeta(wm + sm - half) *
                          mp::zeta(wm - sm + half) / mp::zeta(2L * sm);
  out.one_sided = to_cd(one_sided);
  out.two_sided = 2.0 * out.one_sided;
  // |sigma_{2s-1}(m) m^{1/2-s}| <= d(m) m^{|sigma-1/2|}, d(m) <= 2 sqrt(m).
  out.tail_bound = 2.0 * std::abs(inv_theta) * std::pow(static_cast<double>(M), a + 1.0) / (-a - 1.0);
  return out;
}

}  // namespace eiskern::nonhol
