#include "eiskern/mpcore/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "eiskern/error.hpp"

namespace eiskern::mp {

std::vector<Complex> solve(CMatrix a, std::vector<Complex> b) {
  std::size_t n = b.size();
  if (a.size() != n) throw SingularSystem("matrix and right-hand side sizes differ");
  if (n == 0) return {};
  Bits p = b[0].prec();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Real best = abs(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real v = abs(a[r][col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best.is_zero() || best < exp2i(-(p - 8), p)) throw SingularSystem("pivot vanishes at working precision");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n, Complex(p));
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

QPoly charpoly(const QMatrix& a) {
  std::size_t n = a.size();
  QPoly c(n + 1);
  c[n] = 1;
  QMatrix m(n, std::vector<BigRational>(n));
  auto mul = [&](const QMatrix& x, const QMatrix& y) {
    QMatrix r(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    QMatrix am = mul(a, m);
    BigRational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / BigRational(static_cast<long>(k));
    m = am;
  }
  return c;
}

long poly_degree(const QPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

QPoly poly_derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigRational(static_cast<long>(i)));
  if (d.empty()) d.push_back(BigRational(0));
  return d;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  auto trim = [](QPoly& p) {
    long d = poly_degree(p);
    p.resize(static_cast<std::size_t>(std::max(d, 0L)) + 1);
  };
  trim(a);
  trim(b);
  while (poly_degree(b) >= 0) {
    QPoly r = a;
    long db = poly_degree(b);
    while (poly_degree(r) >= db) {
      long dr = poly_degree(r);
      BigRational f = r[dr] / b[db];
      for (long i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
    }
    trim(r);
    a = b;
    b = r;
  }
  long d = poly_degree(a);
  if (d >= 0) {
    BigRational lead = a[d];
    for (auto& x : a) x /= lead;
  }
  return a;
}

std::vector<Complex> poly_roots(const QPoly& p, Bits prec) {
  long deg = poly_degree(p);
  if (deg < 1) return {};
  Bits wp = prec + 32;
  std::vector<Complex> c;
  for (long i = 0; i <= deg; ++i) c.emplace_back(Real(p[i] / p[deg], wp));
  auto eval = [&](const Complex& z) {
    Complex acc(wp);
    for (long i = deg; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  auto deriv = [&](const Complex& z) {
    Complex acc(wp);
    for (long i = deg; i >= 1; --i) acc = acc * z + c[i] * i;
    return acc;
  };
  // Cauchy bound for the initial circle.
  double bound = 1.0;
  for (long i = 0; i < deg; ++i) bound = std::max(bound, 1.0 + std::fabs(c[i].re().to_double()));
  std::vector<Complex> z;
  Complex seed(0.4, 0.9, wp);
  for (long i = 0; i < deg; ++i) z.push_back(ipow(seed, i) * Real(bound, wp));
  Real eps = exp2i(-(wp - 16), wp);
  for (int iter = 0; iter < 2000; ++iter) {
    Real delta(0L, wp);
    for (long i = 0; i < deg; ++i) {
      Complex den(1L, wp);
      for (long j = 0; j < deg; ++j)
        if (j != i) den *= (z[i] - z[j]);
      Complex step = eval(z[i]) / den;
      z[i] -= step;
      delta = max(delta, abs(step) / (abs(z[i]) + 1L));
    }
    if (delta < eps) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 8; ++k) {
      Complex d = deriv(r);
      if (d.is_zero()) break;
      r -= eval(r) / d;
    }
  }
  std::vector<Complex> out;
  for (auto& r : z) out.push_back(r.with_prec(prec));
  return out;
}

}  // namespace eiskern::mp
