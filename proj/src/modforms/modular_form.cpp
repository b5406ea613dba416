#include "eiskern/modforms/modular_form.hpp"

#include <numeric>
#include <string>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"

namespace eiskern::modforms {

namespace {

void require_even_weight(int k, int min_weight) {
  if (k % 2 != 0 || k < min_weight)
    throw BadWeight("weight " + std::to_string(k) + " is not an even integer >= " + std::to_string(min_weight));
}

void require_same_weight(const ModularForm& a, const ModularForm& b) {
  if (a.weight() != b.weight()) throw BadWeight("weights differ");
}

}  // namespace

ModularForm::ModularForm(int weight, QSeries series)
    : weight_(weight), series_(std::move(series)), cuspidal_(weight > 0 && series_[0].is_zero()) {
  if (weight < 0 || weight % 2 != 0) throw BadWeight("level-one forms have even weight >= 0");
}

long dim_modular(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

long dim_cusp(int k) {
  if (k < 12 || k % 2 != 0) return 0;
  return dim_modular(k) - 1;
}

ModularForm eisenstein_qexp(int k, long order) {
  require_even_weight(k, 4);
  QSeries s(order);
  s[0] = 1;
  BigRational c = BigRational(-2L * k) / mp::bernoulli(static_cast<unsigned long>(k));
  for (long n = 1; n <= order; ++n) s[n] = c * mp::divisor_sigma(k - 1, static_cast<unsigned long>(n));
  return ModularForm(k, std::move(s));
}

ModularForm delta_qexp(long order) {
  if (order < 2) throw InsufficientPrecision("delta_qexp needs order >= 2");
  // q prod (1 - q^n)^24 = q (eta^3 / q^{1/8})^8 with Jacobi's series for eta^3.
  std::size_t len = static_cast<std::size_t>(order);
  std::vector<BigInt> p(len);
  for (long m = 0;; ++m) {
    long e = m * (m + 1) / 2;
    if (e >= order) break;
    p[e] = (m % 2 ? -1 : 1) * (2 * m + 1);
  }
  auto square = [len](const std::vector<BigInt>& a) {
    std::vector<BigInt> r(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
    }
    return r;
  };
  p = square(square(square(p)));
  QSeries s(order);
  for (long i = 1; i <= order; ++i) s[i] = BigRational(p[i - 1]);
  return ModularForm(12, std::move(s));
}

ModularForm operator*(const ModularForm& a, const ModularForm& b) {
  return ModularForm(a.weight() + b.weight(), a.series() * b.series());
}

ModularForm operator+(const ModularForm& a, const ModularForm& b) {
  require_same_weight(a, b);
  return ModularForm(a.weight(), a.series() + b.series());
}

ModularForm operator-(const ModularForm& a, const ModularForm& b) {
  require_same_weight(a, b);
  return ModularForm(a.weight(), a.series() - b.series());
}

ModularForm operator*(const BigRational& c, const ModularForm& f) { return ModularForm(f.weight(), c * f.series()); }

std::vector<ModularForm> victor_miller_basis(int k, long order) {
  if (k < 0 || k % 2 != 0) throw BadWeight("weight must be even and non-negative");
  long dim = dim_modular(k);
  std::vector<QSeries> rows;
  if (dim == 0) return {};
  if (k == 0) {
    QSeries one(order);
    one[0] = 1;
    return {ModularForm(0, one)};
  }
  if (order < dim - 1) throw InsufficientPrecision("order below dim M_k - 1");
  QSeries e4 = eisenstein_qexp(4, order).series();
  QSeries e6 = eisenstein_qexp(6, order).series();
  QSeries delta = order >= 2 ? delta_qexp(order).series() : QSeries(order);
  for (long j = 0; j < dim; ++j) {
    long r = k - 12 * j;
    long b = (r % 4 == 0) ? 0 : 1;
    long a = (r - 6 * b) / 4;
    QSeries m = pow(delta, static_cast<unsigned>(j), order) * pow(e4, static_cast<unsigned>(a), order);
    if (b) m = m * e6;
    rows.push_back(std::move(m));
  }
  // rows[j] = q^j + ...; clear the entries above the diagonal.
  for (long j = dim - 1; j >= 0; --j) {
    rows[j] *= BigRational(1) / rows[j][j];
    for (long i = j + 1; i < dim; ++i) {
      BigRational c = rows[j][i];
      if (!c.is_zero()) rows[j] -= c * rows[i];
    }
  }
  std::vector<ModularForm> out;
  for (auto& r : rows) out.emplace_back(k, std::move(r));
  return out;
}

std::vector<ModularForm> cusp_basis(int k, long order) {
  auto vm = victor_miller_basis(k, order);
  if (vm.empty()) return {};
  vm.erase(vm.begin());
  return vm;
}

ModularForm hecke_operator(long m, const ModularForm& f, long target_order) {
  if (m < 1) throw OutOfDomain("Hecke index must be positive");
  long max_order = f.order() / m;
  if (target_order < 0) target_order = max_order;
  if (target_order > max_order)
    throw InsufficientPrecision("T_" + std::to_string(m) + " output order " + std::to_string(target_order) +
                                " exceeds floor(N_q/m) = " + std::to_string(max_order));
  int k = f.weight();
  QSeries out(target_order);
  for (long n = 0; n <= target_order; ++n) {
    unsigned long g = n == 0 ? static_cast<unsigned long>(m) : std::gcd(static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    BigRational acc;
    for (unsigned long d : mp::divisors(g)) {
      BigInt dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), d, static_cast<unsigned long>(k - 1));
      long idx = static_cast<long>((static_cast<unsigned long>(m) * static_cast<unsigned long>(n)) / (d * d));
      acc += BigRational(dk) * f[idx];
    }
    out[n] = acc;
  }
  return ModularForm(k, std::move(out));
}

ModularForm rankin_cohen(const ModularForm& g1, const ModularForm& g2, unsigned n) {
  int k1 = g1.weight(), k2 = g2.weight();
  long order = std::min(g1.order(), g2.order());
  QSeries acc(order);
  for (unsigned r = 0; r <= n; ++r) {
    BigInt c = mp::binomial(static_cast<unsigned long>(k1 + n - 1), n - r) *
               mp::binomial(static_cast<unsigned long>(k2 + n - 1), r);
    if (r % 2) c = -c;
    QSeries term = g1.series().truncated(order).theta(r) * g2.series().truncated(order).theta(n - r);
    acc += BigRational(c) * term;
  }
  return ModularForm(k1 + k2 + 2 * static_cast<int>(n), std::move(acc));
}

ModularForm cuspidal_projection_exact(const ModularForm& g) {
  require_even_weight(g.weight(), 4);
  if (g[0].is_zero()) return g;
  ModularForm e = eisenstein_qexp(g.weight(), g.order());
  return g - g[0] * e;
}

std::vector<BigRational> cusp_coordinates(const ModularForm& h) {
  if (!h[0].is_zero()) throw OutOfDomain("cusp_coordinates needs a cusp form");
  long d = dim_cusp(h.weight());
  if (h.order() < d) throw InsufficientPrecision("order below dim S_k");
  auto basis = cusp_basis(h.weight(), std::max(h.order(), d));
  std::vector<BigRational> coords;
  QSeries rest = h.series();
  for (long i = 1; i <= d; ++i) coords.push_back(h[i]);
  for (long i = 0; i < d; ++i) rest -= coords[i] * basis[i].series().truncated(h.order());
  if (!rest.is_zero()) throw OutOfDomain("series is not a cusp form of the stated weight");
  return coords;
}

}  // namespace eiskern::modforms
