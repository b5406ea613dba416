#include <cmath>
#include <stdexcept>

#include "eiskern/dbleis/coset.hpp"
#include "eiskern/dbleis/dbleis.hpp"
#include "eiskern/dbleis/fastmath.hpp"
#include "eiskern/error.hpp"

namespace eiskern::dbleis {

using fast::cd;
using fast::Jet;

namespace {

constexpr mp::Bits kOut = 64;
constexpr long kDirectLimit = 3000;  // cosets; the direct pair sum is quadratic in this
const cd kTwoPiI(0.0, 2.0 * M_PI);

cd check_z(const Complex& z) {
  cd zz = fast::to_cd(z);
  if (!(zz.imag() > 0)) throw OutOfDomain("point evaluation needs Im z > 0");
  return zz;
}

cd ipow(cd b, long e) {
  if (e < 0) {
    b = 1.0 / b;
    e = -e;
  }
  cd r = 1.0;
  for (unsigned long n = static_cast<unsigned long>(e); n; n >>= 1) {
    if (n & 1UL) r *= b;
    b *= b;
  }
  return r;
}

double sign_pow(long e) { return (e % 2 == 0) ? 1.0 : -1.0; }

double binom(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double fact(long n) {
  double r = 1.0;
  for (long i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

// Jet of e(m gamma z) j(gamma, z)^{-k} around z0.
Jet poincare_term_jet(const Coset& g, cd z0, int k, long m, int order) {
  Jet jz(order, g.j);
  if (order >= 1) jz[1] = static_cast<double>(g.c);
  Jet gz = g.c == 0 ? Jet::variable(order, z0) : [&] {
    Jet t = fast::inverse(jz) * cd(-1.0 / static_cast<double>(g.c));
    t[0] = g.gz;
    return t;
  }();
  Jet out = fast::ipow(jz, -k);
  if (m != 0) out = out * fast::exp(gz * (kTwoPiI * static_cast<double>(m)));
  return out;
}

struct Sums {
  cd full = 0.0, half = 0.0;
};

// sum over B\Gamma (both signs) of c^r j^e e(m gamma z).
Sums single_sum(const std::vector<Coset>& cs, long r, long e, long m, double half_radius) {
  Sums out;
  double sym = 1.0 + sign_pow(r + e);
  if (sym == 0.0) return out;
  for (const auto& g : cs) {
    cd t = ipow(cd(static_cast<double>(g.c), 0.0), r) * ipow(g.j, e);
    if (m != 0) t *= std::exp(kTwoPiI * static_cast<double>(m) * g.gz);
    t *= sym;
    out.full += t;
    if (g.radius <= half_radius) out.half += t;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> dp_params(int k1, int k2, cd w, long m1, long m2) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", w.real(), w.imag());
  return {{"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}, {"w", buf},
          {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}};
}

}  // namespace

KernelPointValue poincare_point_eval(const Complex& z, int k, long m, long H) {
  if (k % 2 || k < 4) throw BadWeight("Poincare series need even k >= 4");
  if (m < 0) throw OutOfDomain("Poincare index must be non-negative");
  cd zz = check_z(z);
  auto cs = enumerate_cosets(zz, static_cast<double>(H));
  cd full = 0.0, half = 0.0;
  for (const auto& g : cs) {
    cd t = ipow(g.j, -k);
    if (m != 0) t *= std::exp(kTwoPiI * static_cast<double>(m) * g.gz);
    full += t;
    if (g.radius <= H / 2.0) half += t;
  }
  KernelPointValue out;
  out.z = z;
  out.params = {{"k", std::to_string(k)}, {"m", std::to_string(m)}};
  out.value = fast::from_cd(full, kOut);
  out.H = H;
  out.err_est = mp::Real(std::abs(full - half) + 1e-14 * std::abs(full), kOut);
  return out;
}

KernelPointValue dbl_poincare_direct(const Complex& z, int k1, int k2, const Complex& w, long m1, long m2, long H) {
  cd zz = check_z(z), ww = fast::to_cd(w);
  if (k1 < 3 || k2 < 3) throw BadWeight("double Poincare series need k1, k2 >= 3");
  auto cs = enumerate_cosets(zz, static_cast<double>(H));
  if (static_cast<long>(cs.size()) > kDirectLimit)
    throw NonConvergence("direct pair sum limited to " + std::to_string(kDirectLimit) + " cosets");
  struct Vec {
    long c, d;
    cd j, e1, e2;
    double radius;
  };
  std::vector<Vec> vs;
  for (const auto& g : cs) {
    for (int sgn : {1, -1}) {
      cd j = static_cast<double>(sgn) * g.j;
      cd e1 = ipow(j, -k1), e2 = ipow(j, -k2);
      if (m1) e1 *= std::exp(kTwoPiI * static_cast<double>(m1) * g.gz);
      if (m2) e2 *= std::exp(kTwoPiI * static_cast<double>(m2) * g.gz);
      vs.push_back({sgn * g.c, sgn * g.d, j, e1, e2, g.radius});
    }
  }
  double y = zz.imag();
  cd full = 0.0, half = 0.0;
  for (const auto& g : vs) {
    for (const auto& h : vs) {
      long det = g.c * h.d - g.d * h.c;
      if (det <= 0) continue;
      // c_{gamma delta^{-1}} <= Im(gamma z)^{-1/2} Im(delta z)^{-1/2}
      if (static_cast<double>(det) > std::abs(g.j) * std::abs(h.j) / y * (1.0 + 1e-12))
        throw std::logic_error("coset determinant exceeds the Im(gamma z) Im(delta z) bound");
      cd t = std::exp((ww - 1.0) * std::log(static_cast<double>(det))) * g.e1 * h.e2;
      full += t;
      if (g.radius <= H / 2.0 && h.radius <= H / 2.0) half += t;
    }
  }
  KernelPointValue out;
  out.z = z;
  out.params = dp_params(k1, k2, ww, m1, m2);
  out.params.emplace_back("method", "direct");
  out.value = fast::from_cd(full, kOut);
  out.H = H;
  out.err_est = mp::Real(std::abs(full - half) + 1e-13 * std::abs(full), kOut);
  return out;
}

KernelPointValue dbl_poincare_point_eval(const Complex& z, int k1, int k2, const Complex& w, long m1, long m2,
                                         long H) {
  cd zz = check_z(z), ww = fast::to_cd(w);
  if (k1 < 3 || k2 < 3) throw BadWeight("double Poincare series need k1, k2 >= 3");
  if (m1 < 0 || m2 < 0) throw OutOfDomain("Poincare indices must be non-negative");
  if (!(ww.real() < k1 - 1.0 && ww.real() < k2 - 1.0)) throw OutOfDomain("need Re(w) < k1 - 1, k2 - 1");
  KernelPointValue out;
  out.z = z;
  out.params = dp_params(k1, k2, ww, m1, m2);
  out.H = H;
  if ((k1 - k2) % 2 != 0) {
    out.value = Complex(kOut);
    out.err_est = mp::Real(0L, kOut);
    return out;
  }
  double lw = ww.real() - 1.0;
  bool integral = ww.imag() == 0.0 && lw >= 0.0 && std::floor(lw) == lw;
  long l = integral ? static_cast<long>(lw) : -1;
  if (!integral || (l + k1) % 2 != 0) {
    auto cs = enumerate_cosets(zz, static_cast<double>(H));
    if (static_cast<long>(cs.size()) > kDirectLimit)
      throw ParityUnsupported("determinant factorisation needs integer w >= 1 with w - 1 + k1 even");
    return dbl_poincare_direct(z, k1, k2, w, m1, m2, H);
  }
  auto cs = enumerate_cosets(zz, static_cast<double>(H));
  double hr = H / 2.0;
  // Sum over all (gamma, delta) of det^l X equals twice the det > 0 part.
  cd full = 0.0, half = 0.0;
  for (long r = 0; r <= l; ++r) {
    double coef = binom(l, r) * sign_pow(l - r);
    Sums a = single_sum(cs, r, l - r - k1, m1, hr);
    Sums b = single_sum(cs, l - r, r - k2, m2, hr);
    full += coef * a.full * b.full;
    half += coef * a.half * b.half;
  }
  if (l == 0) {
    // remove delta = +-gamma
    Sums dsum = single_sum(cs, 0, -(k1 + k2), m1 + m2, hr);
    double both = 1.0 + sign_pow(k2);
    full -= both * dsum.full;
    half -= both * dsum.half;
  }
  full *= 0.5;
  half *= 0.5;
  out.params.emplace_back("method", "factorised");
  out.value = fast::from_cd(full, kOut);
  out.err_est = mp::Real(std::abs(full - half) + 1e-13 * std::abs(full), kOut);
  return out;
}

PoincareBracketReport poincare_bracket_check(const Complex& z, int k1, int k2, unsigned n, long m1, long m2, long H) {
  if (k1 % 2 || k2 % 2 || k1 < 4 || k2 < 4) throw BadWeight("bracket check needs even k1, k2 >= 4");
  if (m1 < 0 || m2 < 0) throw OutOfDomain("Poincare indices must be non-negative");
  cd zz = check_z(z);
  const int N = static_cast<int>(n);
  auto cs = enumerate_cosets(zz, static_cast<double>(H));
  // Derivatives of both Poincare series from termwise jets.
  Jet p1(N), p2(N), p1h(N), p2h(N);
  for (const auto& g : cs) {
    Jet a = poincare_term_jet(g, zz, k1, m1, N);
    Jet b = poincare_term_jet(g, zz, k2, m2, N);
    p1 += a;
    p2 += b;
    if (g.radius <= H / 2.0) {
      p1h += a;
      p2h += b;
    }
  }
  auto bracket = [&](const Jet& u, const Jet& v, double* scale) {
    cd acc = 0.0;
    for (int r = 0; r <= N; ++r) {
      cd t = sign_pow(r) * binom(k1 + N - 1, N - r) * binom(k2 + N - 1, r) * u.derivative(r) * v.derivative(N - r);
      if (scale) *scale = std::max(*scale, std::abs(t));
      acc += t;
    }
    return acc;
  };
  double scale = 0.0;
  cd lhs = bracket(p1, p2, &scale);
  cd lhs_half = bracket(p1h, p2h, nullptr);

  auto A = [&](long l, long u) {
    return fact(k1 + N - 1) * fact(k2 + N - 1) /
           (fact(l) * fact(u) * fact(N - l - u) * fact(k1 + l - 1) * fact(k2 + u - 1));
  };
  auto mpow = [](cd base, long e) { return e == 0 ? cd(1.0) : ipow(base, e); };
  cd rhs = 0.0;
  double rhs_err = 0.0;
  for (long l = 0; l <= N; ++l) {
    for (long u = 0; l + u <= N; ++u) {
      cd c = A(l, u) * mpow(-kTwoPiI * static_cast<double>(m1), l) * mpow(kTwoPiI * static_cast<double>(m2), u);
      if (c == cd(0.0)) continue;
      auto dp = dbl_poincare_point_eval(z, k1 + N + static_cast<int>(l - u), k2 + N - static_cast<int>(l - u),
                                        Complex(static_cast<long>(N + 1 - l - u), kOut), m1, m2, H);
      cd t = c * fast::to_cd(dp.value) / 2.0;
      rhs += t;
      rhs_err += std::abs(c) * dp.err_est.to_double() / 2.0;
      scale = std::max(scale, std::abs(t));
      if (l + u == N) {
        auto ps = poincare_point_eval(z, k1 + k2 + 2 * N, m1 + m2, H);
        cd t2 = c * fast::to_cd(ps.value);
        rhs += t2;
        rhs_err += std::abs(c) * ps.err_est.to_double();
        scale = std::max(scale, std::abs(t2));
      }
    }
  }
  PoincareBracketReport rep;
  rep.lhs = fast::from_cd(lhs, kOut);
  rep.rhs = fast::from_cd(rhs, kOut);
  rep.residual = mp::Real(std::abs(lhs - rhs), kOut);
  rep.scale = mp::Real(scale, kOut);
  rep.err_est = mp::Real(std::abs(lhs - lhs_half) + rhs_err, kOut);
  return rep;
}

}  // namespace eiskern::dbleis
