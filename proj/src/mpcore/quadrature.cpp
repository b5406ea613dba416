#include "eiskern/mpcore/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "eiskern/error.hpp"

namespace eiskern::mp {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
void legendre_d(long n, double x, double& pn, double& pn1) {
  double p0 = 1.0, p1 = x;
  for (long j = 2; j <= n; ++j) {
    double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  pn1 = p0;
}

void legendre_mp(long n, const Real& x, Real& pn, Real& pn1) {
  Bits p = x.prec();
  Real p0(1L, p), p1(x), p2(p), t(p);
  for (long j = 2; j <= n; ++j) {
    mpfr_mul(t.get(), x.get(), p1.get(), MPFR_RNDN);
    mpfr_mul_si(t.get(), t.get(), 2 * j - 1, MPFR_RNDN);
    mpfr_mul_si(p2.get(), p0.get(), j - 1, MPFR_RNDN);
    mpfr_sub(p2.get(), t.get(), p2.get(), MPFR_RNDN);
    mpfr_div_si(p2.get(), p2.get(), j, MPFR_RNDN);
    std::swap(p0, p1);
    std::swap(p1, p2);
  }
  pn = p1;
  pn1 = p0;
}

std::shared_ptr<const GaussLegendre> build(long n, Bits prec) {
  auto gl = std::make_shared<GaussLegendre>();
  Bits wp = prec + 16;
  for (long i = 1; i <= n; ++i) {
    double xd = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    for (int it = 0; it < 6; ++it) {
      double pn, pn1;
      legendre_d(n, xd, pn, pn1);
      double dp = n * (xd * pn - pn1) / (xd * xd - 1.0);
      xd -= pn / dp;
    }
    Real x(xd, wp), pn(wp), pn1(wp);
    for (int it = 0; it < 64; ++it) {
      legendre_mp(n, x, pn, pn1);
      Real dp = Real(n, wp) * (x * pn - pn1) / (x * x - 1L);
      Real dx = pn / dp;
      x -= dx;
      if (dx.is_zero() || abs(dx) < exp2i(-(wp - 4), wp)) break;
    }
    legendre_mp(n, x, pn, pn1);
    Real dp = Real(n, wp) * (x * pn - pn1) / (x * x - 1L);
    Real w = Real(2L, wp) / ((1L - x * x) * dp * dp);
    gl->nodes.push_back(x.with_prec(prec));
    gl->weights.push_back(w.with_prec(prec));
  }
  return gl;
}

}  // namespace

std::shared_ptr<const GaussLegendre> gauss_legendre(long n, Bits prec) {
  if (n < 1) throw OutOfDomain("Gauss-Legendre needs at least one node");
  static std::mutex mu;
  static std::map<std::pair<long, Bits>, std::shared_ptr<const GaussLegendre>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, prec});
    if (it != cache.end()) return it->second;
  }
  auto gl = build(n, prec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, prec), gl).first->second;
}

}  // namespace eiskern::mp
