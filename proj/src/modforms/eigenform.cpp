#include "eiskern/modforms/eigenform.hpp"

#include <algorithm>

#include "eiskern/error.hpp"

namespace eiskern::modforms {

const mp::Complex& HeckeEigenform::a(long n) const {
  if (n < 0 || n > order())
    throw InsufficientPrecision("eigenform coefficient " + std::to_string(n) + " beyond order " +
                                std::to_string(order()));
  return numeric_coeffs[static_cast<std::size_t>(n)];
}

std::string HeckeEigenform::label() const {
  return "k" + std::to_string(weight) + "#" + std::to_string(embedding_index);
}

namespace {

void require_range(int k) {
  if (k % 2 != 0 || k < 4 || k > 40) throw BadWeight("eigenforms support even 4 <= k <= 40");
}

mp::QMatrix hecke_matrix(const std::vector<ModularForm>& basis, long p) {
  std::size_t d = basis.size();
  mp::QMatrix m(d, std::vector<BigRational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    ModularForm t = hecke_operator(p, basis[j], static_cast<long>(d));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = t[static_cast<long>(i) + 1];
  }
  return m;
}

}  // namespace

mp::QPoly hecke_charpoly(int k, long p) {
  require_range(k);
  long d = dim_cusp(k);
  if (d == 0) return {BigRational(1)};
  return mp::charpoly(hecke_matrix(cusp_basis(k, p * d), p));
}

std::vector<HeckeEigenform> eigenforms(int k, long order, mp::Bits prec) {
  require_range(k);
  long d = dim_cusp(k);
  if (d == 0) return {};
  long work_order = std::max(order, 2 * d);
  auto basis = cusp_basis(k, work_order);
  if (d == 1) {
    HeckeEigenform f;
    f.weight = k;
    f.dim_Sk = 1;
    f.exact_series = basis[0].series().truncated(order);
    for (long n = 0; n <= order; ++n) f.numeric_coeffs.emplace_back(mp::Real((*f.exact_series)[n], prec));
    return {f};
  }
  mp::QMatrix t2 = hecke_matrix(basis, 2);
  mp::QPoly cp = mp::charpoly(t2);
  if (mp::poly_degree(mp::poly_gcd(cp, mp::poly_derivative(cp))) > 0)
    throw DegenerateSpectrum("T_2 has a repeated eigenvalue in weight " + std::to_string(k));
  mp::Bits wp = prec + 64;
  auto roots = mp::poly_roots(cp, wp);
  std::vector<mp::Real> lambdas;
  for (auto& r : roots) {
    if (mp::abs(r.im()) > mp::exp2i(-(prec / 2), wp) * (mp::abs(r.re()) + 1L))
      throw DegenerateSpectrum("T_2 eigenvalue with non-negligible imaginary part");
    lambdas.push_back(r.re());
  }
  std::sort(lambdas.begin(), lambdas.end(), [](const mp::Real& a, const mp::Real& b) { return a < b; });
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (mp::abs(lambdas[i] - lambdas[i - 1]) < mp::exp2i(-(prec / 2), wp) * mp::abs(lambdas[i]))
      throw DegenerateSpectrum("T_2 eigenvalues collide at working precision");
  }
  std::vector<HeckeEigenform> out;
  for (std::size_t e = 0; e < lambdas.size(); ++e) {
    // Solve (T - lambda) v = 0 with v_1 = 1 using rows 2..d.
    std::size_t m = static_cast<std::size_t>(d) - 1;
    mp::CMatrix a(m, std::vector<mp::Complex>(m, mp::Complex(wp)));
    std::vector<mp::Complex> rhs(m, mp::Complex(wp));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        mp::Real v(t2[i + 1][j + 1], wp);
        if (i == j) v -= lambdas[e];
        a[i][j] = mp::Complex(v);
      }
      rhs[i] = mp::Complex(-mp::Real(t2[i + 1][0], wp));
    }
    auto sol = mp::solve(a, rhs);
    std::vector<mp::Real> v{mp::Real(1L, wp)};
    for (auto& s : sol) v.push_back(s.re());
    HeckeEigenform f;
    f.weight = k;
    f.dim_Sk = d;
    f.embedding_index = static_cast<int>(e);
    for (long n = 0; n <= order; ++n) {
      mp::Real acc(0L, wp);
      for (long j = 0; j < d; ++j) acc += v[j] * mp::Real(basis[j][n], wp);
      f.numeric_coeffs.emplace_back(acc.with_prec(prec));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<mp::Complex> eigen_coordinates(const ModularForm& h, const std::vector<HeckeEigenform>& basis) {
  if (!h[0].is_zero()) throw OutOfDomain("eigen_coordinates needs a cusp form");
  std::size_t d = basis.size();
  if (d == 0) return {};
  mp::Bits p = basis[0].prec();
  mp::CMatrix a(d, std::vector<mp::Complex>(d, mp::Complex(p)));
  std::vector<mp::Complex> rhs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = basis[j].a(static_cast<long>(i) + 1);
    rhs.emplace_back(mp::Real(h[static_cast<long>(i) + 1], p));
  }
  return mp::solve(a, rhs);
}

}  // namespace eiskern::modforms
