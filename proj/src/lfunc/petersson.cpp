#include "eiskern/lfunc/petersson.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "eiskern/error.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/mpcore/quadrature.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::lfunc {

std::string to_string(NormMethod m) {
  return m == NormMethod::StripQuadrature ? "strip+quadrature" : "rank-identity";
}

namespace {

void require_cuspidal(const HeckeEigenform& f) {
  if (f.weight < 12 || f.dim_Sk < 1) throw BadWeight("Petersson norm needs a cusp form");
}

Real strip_part(const std::vector<Real>& a, const std::vector<Real>& b, int k, long terms, mp::Bits wp) {
  Real acc(0L, wp);
  Real four_pi = 4L * mp::pi(wp);
  Real a1(static_cast<long>(k - 1), wp);
  for (long n = 1; n <= terms; ++n) {
    Real x = four_pi * n;
    auto i = static_cast<std::size_t>(n);
    acc += a[i] * b[i] * mp::inc_gamma_upper(a1, x) / mp::pow(x, a1);
  }
  return acc;
}

// 2 int_0^{1/2} int_{sqrt(1-x^2)}^1 y^{k-2} Re(g conj f)(x+iy) dy dx with n nodes per axis;
// real coefficients make the integrand even in x.
Real region_part(const std::vector<Real>& a, const std::vector<Real>& b, int k, long terms, long n, mp::Bits wp) {
  auto gl = mp::gauss_legendre(n, wp);
  Real acc(0L, wp);
  Real two_pi = 2L * mp::pi(wp);
  bool same = &a == &b;
  std::vector<Complex> ea(static_cast<std::size_t>(terms) + 1, Complex(wp)), eb = ea;
  for (long i = 0; i < n; ++i) {
    const Real& xi = gl->nodes[static_cast<std::size_t>(i)];
    Real x = (xi + 1L) / 4L;
    Real wx = gl->weights[static_cast<std::size_t>(i)] / 4L;
    Complex ex = Complex::unit(x);
    Complex pw(1L, wp);
    for (long m = 1; m <= terms; ++m) {
      pw *= ex;
      auto im = static_cast<std::size_t>(m);
      ea[im] = pw * a[im];
      if (!same) eb[im] = pw * b[im];
    }
    Real g = mp::sqrt(1L - x * x);
    Real half_len = (1L - g) / 2L;
    Real inner(0L, wp);
    for (long j = 0; j < n; ++j) {
      const Real& eta = gl->nodes[static_cast<std::size_t>(j)];
      Real y = g + (eta + 1L) * half_len;
      Real r = mp::exp(-two_pi * y);
      Complex va(wp), vb(wp);
      for (long m = terms; m >= 1; --m) {
        auto im = static_cast<std::size_t>(m);
        va += ea[im];
        va *= r;
        if (!same) {
          vb += eb[im];
          vb *= r;
        }
      }
      Real val = same ? mp::norm(va) : (va * mp::conj(vb)).re();
      inner += gl->weights[static_cast<std::size_t>(j)] * val * mp::pow(y, static_cast<long>(k - 2));
    }
    acc += wx * inner * half_len;
  }
  return 2L * acc;
}

std::vector<Real> real_coeffs(const HeckeEigenform& f, long terms, mp::Bits wp) {
  std::vector<Real> out(static_cast<std::size_t>(terms) + 1, Real(0L, wp));
  for (long n = 1; n <= terms; ++n) out[static_cast<std::size_t>(n)] = f.a(n).re().with_prec(wp);
  return out;
}

// Strip plus adaptive region quadrature; returns (value, error).
std::pair<Real, Real> inner_quadrature(const std::vector<Real>& a, const std::vector<Real>& b, int k, long terms,
                                       const PrecisionProfile& prof, const std::string& what) {
  mp::Bits wp = prof.work();
  Real strip = strip_part(a, b, k, terms, wp);
  Real scale = mp::max(mp::abs(strip_part(a, a, k, terms, wp)), mp::abs(strip_part(b, b, k, terms, wp)));
  long n = std::max<long>(16, prof.P / 5);
  Real target = mp::exp2i(-(prof.P + 8), wp);
  Real prev = region_part(a, b, k, terms, n, wp);
  for (long cap = 8 * std::max<long>(16, prof.P / 5); 2 * n <= cap; n *= 2) {
    Real cur = region_part(a, b, k, terms, 2 * n, wp);
    Real diff = mp::abs(cur - prev);
    Real total = strip + cur;
    Real ref = mp::max(mp::abs(total), scale);
    if (diff <= target * ref) {
      Real err = diff + mp::exp2i(-(wp - 16), wp) * ref;
      if (err > prof.tol() * ref) break;
      return {std::move(total), std::move(err)};
    }
    prev = std::move(cur);
  }
  throw QuadratureFailure("fundamental-domain quadrature did not stabilise for " + what);
}

// Bound for sum_{m > M} |a(m) sigma_x(m)| m^{sigma - k} using |a(m)| <= d(m) m^{(k-1)/2}.
double convolution_tail(int k, double sigma, double x, long M) {
  double beta = (k - 1) / 2.0 + sigma - k;
  double factor = 1.0;
  int nd = 1;
  if (x < -1.0) {
    factor = std::riemann_zeta(-x);
  } else {
    beta += std::max(0.0, x);
    nd = 2;
  }
  double eps = std::min(0.5, (-1.0 - beta) / (2.0 * nd));
  double c = std::pow(mp::divisor_constant(eps), nd) * factor;
  double e = beta + nd * eps + 1.0;
  return c * std::pow(static_cast<double>(M), e) / -e;
}

}  // namespace

PeterssonNorm petersson_norm(const HeckeEigenform& f, const PrecisionProfile& prof) {
  require_cuspidal(f);
  long terms = petersson_order(f.weight, prof);
  if (f.order() < terms)
    throw InsufficientPrecision("Petersson quadrature needs " + std::to_string(terms) + " coefficients");
  auto a = real_coeffs(f, terms, prof.work());
  auto [value, err] = inner_quadrature(a, a, f.weight, terms, prof, f.label());
  if (err > prof.tol()) throw QuadratureFailure("Petersson norm error above tolerance for " + f.label());
  return {f.label(), value.with_prec(prof.P), NormMethod::StripQuadrature, err.with_prec(prof.P)};
}

InnerProduct petersson_inner(const modforms::ModularForm& g, const HeckeEigenform& f, const PrecisionProfile& prof) {
  require_cuspidal(f);
  if (g.weight() != f.weight) throw OutOfDomain("inner product needs equal weights");
  if (!g.cuspidal()) throw OutOfDomain("inner product needs a cusp form g");
  long terms = petersson_order(f.weight, prof);
  if (f.order() < terms || g.order() < terms)
    throw InsufficientPrecision("Petersson quadrature needs " + std::to_string(terms) + " coefficients");
  mp::Bits wp = prof.work();
  auto a = real_coeffs(f, terms, wp);
  std::vector<Real> b(static_cast<std::size_t>(terms) + 1, Real(0L, wp));
  for (long n = 1; n <= terms; ++n) b[static_cast<std::size_t>(n)] = Real(g[n], wp);
  auto [value, err] = inner_quadrature(b, a, f.weight, terms, prof, f.label());
  return {value.with_prec(prof.P), err.with_prec(prof.P)};
}

PeterssonNorm petersson_norm_rank_identity(const HeckeEigenform& f, const PrecisionProfile& prof) {
  require_cuspidal(f);
  const int k = f.weight;
  const int k1 = 4, k2 = k - 4;
  if (k2 < 4) throw BadWeight("rank identity needs k - 4 >= 4");
  mp::Bits wp = prof.work();
  long d = f.dim_Sk;
  long ord = std::max<long>(2 * d + 2, 8);
  auto prod = modforms::eisenstein_qexp(k1, ord) * modforms::eisenstein_qexp(k2, ord);
  auto cusp = modforms::cuspidal_projection_exact(prod);
  // Coordinates in the eigenbasis of the same embedding family as f.
  auto basis = eigenbasis(k, prof);
  auto coords = modforms::eigen_coordinates(cusp, *basis);
  Complex cf = coords.at(static_cast<std::size_t>(f.embedding_index));
  if (mp::abs(cf) < mp::exp2i(-(prof.P / 2), wp))
    throw SingularSystem("E_4 E_" + std::to_string(k2) + " has no component along " + f.label());
  LValue l1 = lstar(f, Complex(1L, wp), prof);
  LValue l2 = lstar(f, Complex(static_cast<long>(k2), wp), prof);
  BigRational c = mp::pow(BigRational(1, 2), static_cast<unsigned long>(k - 3)) * BigRational(k1 * k2) /
                  (mp::bernoulli(k1) * mp::bernoulli(k2));
  Complex v = Complex(Real(c, wp)) * l1.value.with_prec(wp) * l2.value.with_prec(wp) / cf;
  Real value = v.re();
  Real rel = (l1.err_est / mp::abs(l1.value) + l2.err_est / mp::abs(l2.value)).with_prec(wp);
  Real err = mp::abs(value) * rel + mp::abs(v.im()) + mp::exp2i(-(wp - 16), wp) * mp::abs(value);
  return {f.label(), value.with_prec(prof.P), NormMethod::RankIdentity, err.with_prec(prof.P)};
}

PeterssonNorm petersson_norm_cached(int k, int index, const PrecisionProfile& prof) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, long>, PeterssonNorm> cache;
  auto key = std::make_tuple(k, index, prof.P);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto b = eigenbasis(k, prof);
  if (index < 0 || static_cast<std::size_t>(index) >= b->size())
    throw OutOfDomain("weight " + std::to_string(k) + " has no eigenform #" + std::to_string(index));
  PeterssonNorm n = petersson_norm((*b)[static_cast<std::size_t>(index)], prof);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, n).first->second;
}

ConvolutionCheck rankin_convolution_check(const HeckeEigenform& f, const Real& s, const Real& w,
                                          const PrecisionProfile& prof, long M) {
  const int k = f.weight;
  double sd = s.to_double(), wd = w.to_double();
  double x = wd - sd;
  if (!(k - sd > (k + 1) / 2.0 + std::max(0.0, x)))
    throw OutOfDomain("convolution series diverges: need Re(k-s) > (k+1)/2 + max(0, Re(w-s))");
  if (k - wd <= 0 && std::floor(k - wd) == k - wd) throw OutOfDomain("Gamma(k-w) has a pole");
  if (M <= 0) M = std::max(prof.M_tail, prof.N_q);
  if (f.order() < M) throw InsufficientPrecision("convolution check needs " + std::to_string(M) + " coefficients");
  mp::Bits wp = prof.work();
  Real sw = s.with_prec(wp), ww = w.with_prec(wp);
  Real kk(static_cast<long>(k), wp);
  Real two_pi = 2L * mp::pi(wp);
  Complex xs(ww - sw);
  bool integer_x = (ww - sw).is_integer();
  Real sum(0L, wp);
  for (long m = 1; m <= M; ++m) {
    Real sig = integer_x ? Real(mp::divisor_sigma((ww - sw).to_long(), static_cast<unsigned long>(m)), wp)
                         : mp::divisor_sigma(xs, static_cast<unsigned long>(m)).re();
    sum += f.a(m).re() * sig * mp::pow(Real(m, wp), sw - kk);
  }
  Real pref = mp::zeta(kk + 1L - sw - ww) * mp::gamma(kk - sw) / mp::pow(two_pi, kk - sw);
  Real lhs = pref * sum;
  LValue la = lstar(f, Complex(kk - sw), prof);
  LValue lb = lstar(f, Complex(kk - ww), prof);
  Real rpref = mp::pow(two_pi, kk - ww) / mp::gamma(kk - ww);
  Real rhs = (rpref * (la.value.with_prec(wp) * lb.value.with_prec(wp)).re());
  double tail = convolution_tail(k, sd, x, M);
  Real bound = mp::abs(pref) * Real(tail, wp) +
               mp::abs(rpref) * (la.err_est.with_prec(wp) * mp::abs(lb.value) + lb.err_est.with_prec(wp) * mp::abs(la.value)) +
               mp::exp2i(-(wp - 16), wp) * (mp::abs(lhs) + mp::abs(rhs));
  return {lhs.with_prec(prof.P), rhs.with_prec(prof.P), mp::abs(lhs - rhs).with_prec(prof.P), bound.with_prec(prof.P), M};
}

}  // namespace eiskern::lfunc
