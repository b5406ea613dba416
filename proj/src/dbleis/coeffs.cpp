#include <cmath>
#include <numeric>

#include "eiskern/dbleis/dbleis.hpp"
#include "eiskern/error.hpp"
#include "eiskern/lfunc/spectral.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::dbleis {

using lfunc::LValue;

Complex DblEisCoeffs::u() const { return (s + w - static_cast<long>(k) + 1L) / 2L; }
Complex DblEisCoeffs::v() const { return (w - s + 1L) / 2L; }

Complex DblEisCoeffs::evaluate(const Complex& z) const {
  mp::Bits p = z.prec();
  Complex q = mp::exp(Complex(-z.im(), z.re()) * (2L * mp::pi(p)));
  Complex acc(p);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc += coeffs[i];
    acc *= q;
  }
  return acc;
}

namespace {

void require_weight(int k) {
  if (k % 2 != 0 || k < 4) throw BadWeight("double Eisenstein series need even k >= 4");
}

// Shared spectral sum: sum_f x_f y_f a_f(n) / <f, f>.
DblEisCoeffs spectral_sum(int k, const Complex& s, const Complex& w, const BigRational* twist,
                          const PrecisionProfile& prof) {
  require_weight(k);
  DblEisCoeffs out;
  out.k = k;
  out.s = s;
  out.w = w;
  out.twisted = twist != nullptr;
  out.twist = twist ? *twist : BigRational(0);
  mp::Bits wp = prof.work();
  out.coeffs.assign(static_cast<std::size_t>(prof.N_q), Complex(wp));
  out.err_est = Real(0L, wp);
  long d = modforms::dim_cusp(k);
  if (d == 0) {
    out.empty = true;
    return out;
  }
  Complex kk(Real(static_cast<long>(k), wp));
  for (int idx = 0; idx < d; ++idx) {
    LValue x, y;
    if (twist) {
      Complex ks = kk - s.with_prec(wp);
      auto f1 = lfunc::eigenform_for(k, idx, ks, twist->den().get_si(), prof);
      x = lfunc::lstar_twisted(*f1, ks, *twist, prof);
      Complex kw = kk - w.with_prec(wp);
      auto f2 = lfunc::eigenform_for(k, idx, kw, 1, prof);
      y = lfunc::lstar(*f2, kw, prof);
    } else {
      auto f1 = lfunc::eigenform_for(k, idx, s, 1, prof);
      x = lfunc::lstar(*f1, s.with_prec(wp), prof);
      auto f2 = lfunc::eigenform_for(k, idx, w, 1, prof);
      y = lfunc::lstar(*f2, w.with_prec(wp), prof);
    }
    lfunc::PeterssonNorm nrm = lfunc::petersson_norm_cached(k, idx, prof);
    auto basis = lfunc::eigenbasis(k, prof);
    const auto& f = (*basis)[static_cast<std::size_t>(idx)];
    Real norm = nrm.value.with_prec(wp);
    Complex prod = x.value.with_prec(wp) * y.value.with_prec(wp) / norm;
    Real perr = (mp::abs(x.value) * y.err_est + mp::abs(y.value) * x.err_est).with_prec(wp) / norm +
                mp::abs(prod) * nrm.err_est.with_prec(wp) / norm;
    for (long n = 1; n <= prof.N_q; ++n) {
      Complex term = prod * f.a(n).re();
      out.coeffs[static_cast<std::size_t>(n - 1)] += term;
      Real e = perr * mp::abs(f.a(n).re());
      if (e > out.err_est) out.err_est = e;
    }
  }
  for (auto& c : out.coeffs) c = c.with_prec(prof.P);
  out.err_est = out.err_est.with_prec(prof.P);
  return out;
}

Real zeta_even(int k, mp::Bits p) { return mp::zeta(Real(static_cast<long>(k), p)); }

}  // namespace

DblEisCoeffs dbl_eis_coeffs(int k, const Complex& s, const Complex& w, const PrecisionProfile& prof) {
  return spectral_sum(k, s, w, nullptr, prof);
}

DblEisCoeffs twisted_dbl_eis_coeffs(int k, const Complex& s, const Complex& w, const BigRational& twist,
                                    const PrecisionProfile& prof) {
  if (twist.den() > 1000000) throw OutOfDomain("twist denominator too large");
  return spectral_sum(k, s, w, &twist, prof);
}

Real rc_identity_residual(int k1, int k2, unsigned n, const PrecisionProfile& prof) {
  if (k1 % 2 || k2 % 2 || k1 < 4 || k2 < 4) throw BadWeight("Rankin-Cohen identity needs even k1, k2 >= 4");
  if (n < 1) throw OutOfDomain("Rankin-Cohen identity needs n >= 1");
  const int k = k1 + k2 + 2 * static_cast<int>(n);
  mp::Bits wp = prof.work();
  long order = prof.N_q;
  auto bracket = modforms::rankin_cohen(modforms::eisenstein_qexp(k1, order), modforms::eisenstein_qexp(k2, order), n);
  BigRational nfact(mp::factorial(n));
  Real pi = mp::pi(wp);
  // n! [.,.]_n / (2 pi i)^n equals n! times the theta-normalised bracket.
  Real c = 2L * mp::pow(pi, static_cast<long>(k)) * mp::gamma(Real(static_cast<long>(k - 1), wp));
  c /= zeta_even(k1, wp) * zeta_even(k2, wp) * mp::gamma(Real(static_cast<long>(k1), wp)) *
       mp::gamma(Real(static_cast<long>(k2), wp)) * mp::gamma(Real(static_cast<long>(k - static_cast<int>(n) - 1), wp));
  c /= mp::pow(4L * pi * pi, static_cast<long>(n));
  if ((k1 / 2) % 2) c = -c;
  if (n % 2) c = -c;
  DblEisCoeffs e = dbl_eis_coeffs(k, Complex(static_cast<long>(k1) + static_cast<long>(n), wp),
                                  Complex(static_cast<long>(n) + 1L, wp), prof);
  Real worst(0L, wp);
  for (long m = 1; m <= prof.N_q; ++m) {
    Real lhs(nfact * bracket[m], wp);
    Complex rhs = e.empty ? Complex(wp) : e(m).with_prec(wp) * c;
    Real r = mp::abs(Complex(lhs) - rhs);
    if (r > worst) worst = r;
  }
  return worst.with_prec(prof.P);
}

KernelReport zagier_kernel_residual(int k1, int k2, unsigned n, const lfunc::HeckeEigenform& f,
                                    const PrecisionProfile& prof) {
  if (k1 % 2 || k2 % 2 || k1 < 4 || k2 < 4) throw BadWeight("kernel formula needs even k1, k2 >= 4");
  const int k = k1 + k2 + 2 * static_cast<int>(n);
  if (k != f.weight) throw OutOfDomain("k1 + k2 + 2n must equal the weight of f");
  mp::Bits wp = prof.work();
  long d = modforms::dim_cusp(k);
  long order = std::max<long>(2 * d + 2, 8);
  auto e1 = modforms::eisenstein_qexp(k1, order), e2 = modforms::eisenstein_qexp(k2, order);
  auto h = n == 0 ? modforms::cuspidal_projection_exact(e1 * e2) : modforms::rankin_cohen(e1, e2, n);
  auto basis = lfunc::eigenbasis(k, prof);
  auto coords = modforms::eigen_coordinates(h, *basis);
  Complex cf = coords.at(static_cast<std::size_t>(f.embedding_index)).with_prec(wp);
  lfunc::PeterssonNorm nrm = lfunc::petersson_norm_cached(k, f.embedding_index, prof);
  Complex lhs = cf * nrm.value.with_prec(wp);

  auto f1 = lfunc::eigenform_for(k, f.embedding_index, Complex(static_cast<long>(n) + 1L, wp), 1, prof);
  LValue la = lfunc::lstar(*f1, Complex(static_cast<long>(n) + 1L, wp), prof);
  LValue lb = lfunc::lstar(*f1, Complex(static_cast<long>(n) + static_cast<long>(k2), wp), prof);
  BigRational c = mp::pow(BigRational(1, 2), static_cast<unsigned long>(k - 3)) *
                  BigRational(mp::binomial(static_cast<unsigned long>(k - 2), n)) * BigRational(k1 * k2) /
                  (mp::bernoulli(static_cast<unsigned long>(k1)) * mp::bernoulli(static_cast<unsigned long>(k2)));
  if ((k1 / 2) % 2) c = -c;
  Complex rhs = Complex(Real(c, wp)) * la.value.with_prec(wp) * lb.value.with_prec(wp);
  Real bound = mp::abs(cf) * nrm.err_est.with_prec(wp) +
               Real(c, wp) * (la.err_est * mp::abs(lb.value) + lb.err_est * mp::abs(la.value)).with_prec(wp);
  bound = mp::abs(bound) + mp::exp2i(-(prof.P - 8), wp) * mp::abs(rhs);
  return {lhs.with_prec(prof.P), rhs.with_prec(prof.P), mp::abs(lhs - rhs).with_prec(prof.P), bound.with_prec(prof.P)};
}

HeckeActionReport hecke_action_identity_residual(const lfunc::HeckeEigenform& f, const Real& s, const Real& w,
                                                 long A_max, const PrecisionProfile& prof) {
  const int k = f.weight;
  double sd = s.to_double(), wd = w.to_double();
  if (!(wd - sd < -1.0)) throw OutOfDomain("Hecke-action sum needs Re(w - s) < -1");
  if (A_max < 1) throw OutOfDomain("A_max must be positive");
  if (k - wd <= 0 && std::floor(k - wd) == k - wd) throw OutOfDomain("Gamma(k-w) has a pole");
  mp::Bits wp = prof.work();
  Real kk(static_cast<long>(k), wp);
  Real sw = s.with_prec(wp), ww = w.with_prec(wp);
  Complex ks(kk - sw);
  int idx = f.embedding_index;

  auto fs = lfunc::eigenform_for(k, idx, Complex(sw), 1, prof);
  LValue ls = lfunc::lstar(*fs, Complex(sw), prof);
  LValue lw = lfunc::lstar(*fs, Complex(ww), prof);
  Real two_pi = 2L * mp::pi(wp);
  Real lpref = mp::pow(two_pi, kk - ww) / mp::gamma(kk - ww);
  Real lhs = lpref * (ls.value.with_prec(wp) * lw.value.with_prec(wp)).re();
  Real lerr = mp::abs(lpref) * (ls.err_est * mp::abs(lw.value) + lw.err_est * mp::abs(ls.value)).with_prec(wp);

  // S_d = sum over p coprime to d of L*(f, k-s; p/d).
  auto ft = lfunc::eigenform_for(k, idx, ks, A_max, prof);
  std::vector<Real> S(static_cast<std::size_t>(A_max) + 1, Real(0L, wp));
  Real serr(0L, wp);
  for (long d = 1; d <= A_max; ++d) {
    lfunc::TwistedLSeries ser(*ft, ks, d, prof);
    for (long p = 0; p < d; ++p) {
      if (std::gcd(p, d) != 1) continue;
      LValue v = ser(p);
      S[static_cast<std::size_t>(d)] += v.value.re().with_prec(wp);
      serr = mp::max(serr, v.err_est.with_prec(wp));
    }
  }
  Real acc(0L, wp), acc_err(0L, wp);
  for (long a = 1; a <= A_max; ++a) {
    Real inner(0L, wp);
    for (long d = 1; d <= a; ++d)
      if (a % d == 0) inner += S[static_cast<std::size_t>(d)];
    Real scale = mp::pow(Real(a, wp), ww - sw - 1L);
    acc += scale * inner;
    acc_err += scale * Real(a, wp) * serr;
  }
  Real z = mp::zeta(kk + 1L - sw - ww);
  Real rhs = z * acc;

  // Tail over a > A_max from Deligne's bound, by the better of the direct and reflected estimates.
  double tail = INFINITY;
  double zf = std::fabs(z.to_double());
  double A = static_cast<double>(A_max);
  if (k - sd > (k + 1) / 2.0) {
    double beta = k / 2.0 + 0.5 - wd;
    double slack = beta - 1.0;
    if (slack > 0) {
      double eps = std::min(0.5, slack / 2.0);
      double b0 = std::tgamma(k - sd) * std::pow(2.0 * M_PI, sd - k) *
                  std::pow(std::riemann_zeta((k - sd) - (k - 1) / 2.0), 2);
      double c = mp::divisor_constant(eps);
      tail = std::min(tail, zf * b0 * c * std::pow(A, 1.0 - beta + eps) / (beta - 1.0 - eps));
    }
  }
  if (sd > (k + 1) / 2.0 && wd + sd < k - 1) {
    double b0 = std::tgamma(sd) * std::pow(2.0 * M_PI, -sd) * std::pow(std::riemann_zeta(sd - (k - 1) / 2.0), 2);
    double e = wd + sd - k + 1.0;
    tail = std::min(tail, zf * b0 * std::pow(A, e) / -e);
  }
  Real bound = Real(std::isfinite(tail) ? tail : 1e300, wp) + lerr + mp::abs(z) * acc_err +
               mp::exp2i(-(prof.P - 8), wp) * (mp::abs(lhs) + mp::abs(rhs));
  return {lhs.with_prec(prof.P), rhs.with_prec(prof.P), mp::abs(lhs - rhs).with_prec(prof.P), bound.with_prec(prof.P),
          A_max};
}

}  // namespace eiskern::dbleis
