#include <gmp.h>
#include <mpfr.h>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/linalg.hpp"
#include "eiskern/periods/periods.hpp"

namespace eiskern::periods {

std::string to_string(Verdict v) { return v == Verdict::Rational ? "rational" : "inconclusive"; }

RationalCertificate rational_reconstruct(const Complex& x, long D_max, const Real& tol) {
  RationalCertificate out;
  out.input = x;
  out.D_max = D_max;
  out.tol = tol;
  mp::Bits wp = x.prec();
  mpq_class r;
  mpfr_get_q(r.get_mpq_t(), x.re().get());
  mp::BigInt n = r.get_num(), d = r.get_den();
  mp::BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Real best_res(0L, wp);
  bool have = false;
  while (d != 0) {
    mp::BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mp::BigInt h = a * h1 + h2, k = a * k1 + k2;
    if (k > D_max) break;
    BigRational c(h, k);
    out.convergents.push_back(c);
    Real res = mp::abs(x.re() - Real(c, wp));
    out.reconstructed = c;
    best_res = res;
    have = true;
    if (res <= tol) break;
    mp::BigInt rem = n - a * d;
    n = d;
    d = rem;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  out.residual = have ? mp::hypot(best_res, x.im()) : mp::abs(x);
  bool real_input = mp::abs(x.im()) <= tol;
  out.verdict = have && best_res <= tol && real_input ? Verdict::Rational : Verdict::Inconclusive;
  return out;
}

RationalCertificate rational_reconstruct(const Complex& x, long D_max) {
  return rational_reconstruct(x, D_max, mp::exp2i(-static_cast<long>(x.prec() / 2), x.prec()));
}

FieldCertificate field_reconstruct(const std::vector<Complex>& values, const std::vector<Complex>& theta, long D_max,
                                   const Real& tol) {
  if (values.empty() || values.size() != theta.size()) throw OutOfDomain("one value per embedding is required");
  std::size_t d = values.size();
  mp::Bits wp = values.front().prec();
  Real scale(1L, wp);
  for (const auto& v : values) scale = mp::max(scale, mp::abs(v));
  Real t = tol * scale;
  FieldCertificate out;
  out.field = d == 1 ? "Q" : "Q(a(2))";
  std::vector<Complex> c;
  if (d == 1) {
    c = values;
  } else {
    mp::CMatrix v(d, std::vector<Complex>(d, Complex(wp)));
    for (std::size_t i = 0; i < d; ++i) {
      Complex p(1L, wp);
      for (std::size_t j = 0; j < d; ++j) {
        v[i][j] = p;
        p *= theta[i];
      }
    }
    c = mp::solve(v, values);
  }
  bool ok = true;
  for (const auto& cj : c) {
    out.coords.push_back(rational_reconstruct(cj, D_max, t));
    ok = ok && out.coords.back().verdict == Verdict::Rational;
  }
  Real worst(0L, wp);
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc(wp), p(1L, wp);
    for (std::size_t j = 0; j < d; ++j) {
      acc += p * Real(out.coords[j].reconstructed, wp);
      p *= theta[i];
    }
    worst = mp::max(worst, mp::abs(values[i] - acc));
  }
  out.residual = worst;
  out.verdict = ok && worst <= t ? Verdict::Rational : Verdict::Inconclusive;
  return out;
}

bool same_reconstruction(const FieldCertificate& a, const FieldCertificate& b) {
  if (a.verdict != Verdict::Rational || b.verdict != Verdict::Rational) return false;
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i].reconstructed != b.coords[i].reconstructed) return false;
  return true;
}

}  // namespace eiskern::periods
