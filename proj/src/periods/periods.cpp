#include "eiskern/periods/periods.hpp"

#include "eiskern/dbleis/dbleis.hpp"
#include "eiskern/error.hpp"
#include "eiskern/lfunc/petersson.hpp"
#include "eiskern/lfunc/spectral.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/mpcore/linalg.hpp"

namespace eiskern::periods {

namespace {

long dimension(int k) {
  if (k % 2 || k < 12 || modforms::dim_cusp(k) < 1) throw BadWeight("no cusp forms of weight " + std::to_string(k));
  return modforms::dim_cusp(k);
}

void require_index(int k, int index) {
  if (index < 0 || index >= dimension(k))
    throw OutOfDomain("weight " + std::to_string(k) + " has no eigenform #" + std::to_string(index));
}

Real rel_err(const lfunc::LValue& l) { return l.err_est / mp::abs(l.value); }

std::vector<Complex> thetas(int k, const PrecisionProfile& prof) {
  std::vector<Complex> out;
  for (const auto& f : *lfunc::eigenbasis(k, prof)) out.push_back(f.a(2).with_prec(prof.P));
  return out;
}

lfunc::LValue lvalue(int k, int index, const Complex& s, const PrecisionProfile& prof) {
  auto f = lfunc::eigenform_for(k, index, s, 1, prof);
  return lfunc::lstar(*f, s, prof);
}

// i^u
Complex i_pow(int u, mp::Bits wp) {
  switch (((u % 4) + 4) % 4) {
    case 0: return Complex(1L, wp);
    case 1: return Complex::i(wp);
    case 2: return Complex(-1L, wp);
    default: return -Complex::i(wp);
  }
}

// Coordinates of a coefficient vector in the eigenbasis, from n = 1..dim.
std::vector<Complex> coordinates(const dbleis::DblEisCoeffs& c, int k, const PrecisionProfile& prof) {
  auto basis = lfunc::eigenbasis(k, prof);
  std::size_t d = basis->size();
  mp::CMatrix m(d, std::vector<Complex>(d, Complex(prof.work())));
  std::vector<Complex> rhs;
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t j = 0; j < d; ++j) m[n][j] = (*basis)[j].a(static_cast<long>(n) + 1).with_prec(prof.work());
    rhs.push_back(c(static_cast<long>(n) + 1).with_prec(prof.work()));
  }
  return mp::solve(m, rhs);
}

}  // namespace

PeriodPair period_pair(int k, int index, const PrecisionProfile& prof) {
  require_index(k, index);
  mp::Bits wp = prof.work();
  lfunc::LValue la = lvalue(k, index, Complex(static_cast<long>(k - 1), wp), prof);
  lfunc::LValue lb = lvalue(k, index, Complex(static_cast<long>(k - 2), wp), prof);
  lfunc::PeterssonNorm nrm = lfunc::petersson_norm_cached(k, index, prof);
  Real a = la.value.re().with_prec(wp), b = lb.value.re().with_prec(wp), n = nrm.value.with_prec(wp);
  if (a.is_zero() || b.is_zero()) throw SingularSystem("vanishing L-value at the edge of the critical strip");
  PeriodPair out;
  out.form = nrm.form;
  out.norm = nrm.value;
  out.c_f = (a * b / n).with_prec(prof.P);
  out.omega_plus = (a * b / n * n / a).with_prec(prof.P);
  out.omega_minus = (n / b).with_prec(prof.P);
  Real rel = (rel_err(la) + rel_err(lb)).with_prec(wp) + nrm.err_est.with_prec(wp) / n;
  out.err_est = (rel * (mp::abs(out.omega_plus) + mp::abs(out.omega_minus) + mp::abs(out.c_f))).with_prec(prof.P);
  out.product_residual = mp::abs(out.omega_plus * out.omega_minus - out.norm).with_prec(prof.P);
  return out;
}

ManinTable manin_table(int k, int index, const PrecisionProfile& prof, long D_max) {
  require_index(k, index);
  long d = dimension(k);
  mp::Bits wp = prof.work();
  std::vector<PeriodPair> pp;
  for (int j = 0; j < d; ++j) pp.push_back(period_pair(k, j, prof));
  auto th = thetas(k, prof);
  ManinTable out;
  out.k = k;
  out.index = index;
  out.periods = pp[static_cast<std::size_t>(index)];
  out.all_certified = true;
  for (int s = 1; s <= k - 1; ++s) {
    ManinEntry e;
    e.s = s;
    e.plus = s % 2 == 0;
    std::vector<Complex> vals;
    for (int j = 0; j < d; ++j) {
      lfunc::LValue l = lvalue(k, j, Complex(static_cast<long>(s), wp), prof);
      const PeriodPair& p = pp[static_cast<std::size_t>(j)];
      Real om = e.plus ? p.omega_plus : p.omega_minus;
      vals.push_back(Complex(l.value.re().with_prec(prof.P) / om));
    }
    e.ratio = vals[static_cast<std::size_t>(index)].re();
    e.cert = field_reconstruct(vals, th, D_max, prof.tol());
    out.all_certified = out.all_certified && e.cert.verdict == Verdict::Rational;
    out.entries.push_back(std::move(e));
  }
  return out;
}

bool same_reconstruction(const ManinTable& a, const ManinTable& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!same_reconstruction(a.entries[i].cert, b.entries[i].cert)) return false;
  return true;
}

KdkdReport kdkd_check(int k, int index, const Complex& s, const PrecisionProfile& prof, long D_max) {
  require_index(k, index);
  long d = dimension(k);
  mp::Bits wp = prof.work();
  Complex sw = s.with_prec(wp);
  auto plus = dbleis::dbl_eis_coeffs(k, sw, Complex(static_cast<long>(k - 1), wp), prof);
  auto minus = dbleis::dbl_eis_coeffs(k, Complex(static_cast<long>(k - 2), wp), sw, prof);
  auto xp = coordinates(plus, k, prof);
  auto xm = coordinates(minus, k, prof);
  std::vector<Complex> rp, rm;
  KdkdReport out;
  out.s = s;
  for (int j = 0; j < d; ++j) {
    auto ju = static_cast<std::size_t>(j);
    PeriodPair p = period_pair(k, j, prof);
    lfunc::LValue l = lvalue(k, j, sw, prof);
    Complex op = l.value.with_prec(wp) / p.omega_plus.with_prec(wp);
    Complex om = l.value.with_prec(wp) / p.omega_minus.with_prec(wp);
    if (mp::abs(xp[ju]) == 0L || mp::abs(xm[ju]) == 0L) throw SingularSystem("double Eisenstein coordinate vanishes");
    rp.push_back((op / xp[ju]).with_prec(prof.P));
    rm.push_back((om / xm[ju]).with_prec(prof.P));
    if (j == index) {
      out.form = p.form;
      out.lvalue = l.value;
      out.over_plus = op.with_prec(prof.P);
      out.over_minus = om.with_prec(prof.P);
      out.coord_plus = xp[ju].with_prec(prof.P);
      out.coord_minus = xm[ju].with_prec(prof.P);
      out.ratio_plus = rp.back();
      out.ratio_minus = rm.back();
      Real inv_c = 1L / p.c_f;
      out.identity_residual = mp::abs(out.ratio_plus - inv_c) + mp::abs(out.ratio_minus - 1L);
    }
  }
  auto th = thetas(k, prof);
  out.cert_plus = field_reconstruct(rp, th, D_max, prof.tol());
  out.cert_minus = field_reconstruct(rm, th, D_max, prof.tol());
  if (!s.im().is_zero()) {
    out.decidable = false;
    out.note = "non-real s: field membership is not decidable numerically; only the ratio identity is checked";
    out.cert_plus.verdict = Verdict::Inconclusive;
    out.cert_minus.verdict = Verdict::Inconclusive;
  }
  return out;
}

TwistedPeriodReport twisted_period_check(int k, int index, int u, const BigRational& twist,
                                         const PrecisionProfile& prof, long D_max) {
  require_index(k, index);
  if (u < 1 || u > k - 1) throw OutOfDomain("u must lie in 1..k-1");
  long d = dimension(k);
  mp::Bits wp = prof.work();
  if (!twist.den().fits_slong_p()) throw OutOfDomain("twist denominator too large");
  long q = twist.den().get_si();
  Complex su(static_cast<long>(u), wp);
  Complex scale = i_pow(u, wp) * mp::pow(Real(q, wp), static_cast<long>(k - 2));
  std::vector<Complex> al, be;
  std::vector<PeriodPair> pp;
  std::vector<Complex> xs;
  TwistedPeriodReport out;
  out.u = u;
  out.twist = twist;
  for (int j = 0; j < d; ++j) {
    auto f = lfunc::eigenform_for(k, j, su, q, prof);
    lfunc::LValue l = lfunc::lstar_twisted(*f, su, twist, prof);
    PeriodPair p = period_pair(k, j, prof);
    Real tiny = mp::exp2i(-(prof.P / 2), wp);
    if (mp::abs(p.omega_plus) < tiny || mp::abs(p.omega_minus) < tiny) throw SingularSystem("degenerate periods");
    Complex x = scale * l.value.with_prec(wp);
    al.push_back(Complex((x.re() / p.omega_plus).with_prec(prof.P)));
    be.push_back(Complex((x.im() / p.omega_minus).with_prec(prof.P)));
    if (j == index) {
      out.form = p.form;
      out.value = l.value;
    }
    pp.push_back(std::move(p));
    xs.push_back(std::move(x));
  }
  auto ui = static_cast<std::size_t>(index);
  out.alpha = al[ui].re();
  out.beta = be[ui].re();
  auto th = thetas(k, prof);
  out.cert_alpha = field_reconstruct(al, th, D_max, prof.tol());
  out.cert_beta = field_reconstruct(be, th, D_max, prof.tol());
  auto eval = [&](const FieldCertificate& c) {
    Complex p(1L, wp);
    Complex v(wp);
    for (const auto& coord : c.coords) {
      v += p * Real(coord.reconstructed, wp);
      p *= th[ui].with_prec(wp);
    }
    return v.re();
  };
  Complex rebuilt(eval(out.cert_alpha) * pp[ui].omega_plus.with_prec(wp),
                  eval(out.cert_beta) * pp[ui].omega_minus.with_prec(wp));
  out.residual = mp::abs(xs[ui] - rebuilt).with_prec(prof.P);
  return out;
}

}  // namespace eiskern::periods
