#include <doctest.h>

#include "eiskern/error.hpp"
#include "eiskern/modforms/eigenform.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "oracles/qexp_oracle.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::modforms;
using mp::BigRational;

namespace {

ModularForm random_form(int k, long order) {
  auto basis = victor_miller_basis(k, order);
  std::uniform_int_distribution<long> d(-9, 9);
  QSeries acc(order);
  for (auto& g : basis) acc += BigRational(d(testsupport::rng()), 1 + std::labs(d(testsupport::rng()))) * g.series();
  return ModularForm(k, acc);
}

}  // namespace

TEST_CASE("Eisenstein series") {
  auto e4 = eisenstein_qexp(4, 10);
  auto e6 = eisenstein_qexp(6, 10);
  CHECK(e4[1] == BigRational(240));
  CHECK(e6[1] == BigRational(-504));
  CHECK(e4[0] == BigRational(1));
  CHECK_FALSE(e4.cuspidal());
  for (int k : {4, 8, 12, 20}) {
    auto e = eisenstein_qexp(k, 12);
    auto o = oracle::eisenstein(static_cast<unsigned long>(k), 12);
    for (long n = 0; n <= 12; ++n) CHECK(e[n] == BigRational(o[n]));
  }
  CHECK_THROWS_AS(eisenstein_qexp(5, 10), BadWeight);
  CHECK_THROWS_AS(eisenstein_qexp(2, 10), BadWeight);
}

TEST_CASE("Delta") {
  auto d = delta_qexp(30);
  CHECK(d[1] == BigRational(1));
  CHECK(d[2] == BigRational(-24));
  CHECK(d.cuspidal());
  auto o = oracle::delta(30);
  for (long n = 0; n <= 30; ++n) CHECK(d[n] == BigRational(o[n]));
  for (unsigned long n = 1; n <= 20; ++n) {
    mpz_class diff = d[static_cast<long>(n)].num() - oracle::sigma(11, n);
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 691) != 0);
  }
}

TEST_CASE("dimension formulas and Victor-Miller basis") {
  for (int k = 0; k <= 60; k += 2) {
    CHECK(dim_modular(k) == oracle::monomial_count(k));
    auto vm = victor_miller_basis(k, 20);
    CHECK(static_cast<long>(vm.size()) == dim_modular(k));
    long d = static_cast<long>(vm.size()) - 1;
    for (long i = 0; i <= d; ++i)
      for (long j = 0; j <= d; ++j) CHECK(vm[i][j] == BigRational(i == j ? 1 : 0));
  }
  auto b0 = victor_miller_basis(0, 5);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0][0] == BigRational(1));
  auto b12 = victor_miller_basis(12, 10);
  REQUIRE(b12.size() == 2);
  CHECK(b12[1] == delta_qexp(10));
}

TEST_CASE("Hecke operators") {
  auto d = delta_qexp(60);
  auto t2 = hecke_operator(2, d);
  CHECK(t2.order() == 30);
  CHECK(t2.series() == (BigRational(-24) * d.series()).truncated(30));
  CHECK_THROWS_AS(hecke_operator(2, d, 31), InsufficientPrecision);
  for (int k : {16, 24, 28}) {
    auto f = random_form(k, 200);
    for (long p : {2, 3, 5}) CHECK(hecke_operator(p, f)[1] == f[p]);
    for (long m = 1; m <= 6; ++m) {
      for (long n = 1; n <= 6; ++n) {
        if (std::gcd(m, n) != 1) continue;
        auto lhs = hecke_operator(m, hecke_operator(n, f), 5);
        auto rhs = hecke_operator(m * n, f, 5);
        CHECK(lhs == rhs);
      }
    }
  }
  auto f = random_form(36, 400);
  for (long m = 1; m <= 8; ++m)
    for (long n = m + 1; n <= 8; ++n)
      CHECK(hecke_operator(m, hecke_operator(n, f), 6) == hecke_operator(n, hecke_operator(m, f), 6));
}

TEST_CASE("eigenforms") {
  CHECK(eigenforms(10, 20, 128).empty());
  auto e12 = eigenforms(12, 30, 128);
  REQUIRE(e12.size() == 1);
  CHECK(*e12[0].exact_series == delta_qexp(30).series());
  CHECK(e12[0].label() == "k12#0");
  for (int k : {16, 18, 20, 22, 26}) {
    auto e = eigenforms(k, 20, 128);
    REQUIRE(e.size() == 1);
    CHECK(e[0].exact_series.has_value());
    CHECK((*e[0].exact_series)[1] == BigRational(1));
  }
  // weight 24: a(2) are the roots of the exact T_2 characteristic polynomial
  auto cp = hecke_charpoly(24);
  REQUIRE(cp.size() == 3);
  CHECK(cp[2] == BigRational(1));
  CHECK(cp[1] == BigRational(-1080));
  CHECK(cp[0] == BigRational(-20468736L));
  mp::Bits p = 256;
  auto e24 = eigenforms(24, 40, p);
  REQUIRE(e24.size() == 2);
  mp::Real disc = mp::sqrt(mp::Real(BigRational(1080 * 1080L + 4 * 20468736L), p));
  mp::Real r0 = (mp::Real(1080L, p) - disc) / 2L;
  mp::Real r1 = (mp::Real(1080L, p) + disc) / 2L;
  CHECK(mp::abs(e24[0].a_real(2) - r0) < mp::exp2i(-230, p) * mp::abs(r0));
  CHECK(mp::abs(e24[1].a_real(2) - r1) < mp::exp2i(-230, p) * mp::abs(r1));
  for (int k : {24, 28, 32, 36, 40}) {
    auto e = eigenforms(k, 40, p);
    CHECK(static_cast<long>(e.size()) == dim_cusp(k));
    for (auto& f : e) {
      CHECK(f.a(1) == mp::Complex(1L, p));
      for (long n = 1; n <= 40; ++n) CHECK(f.a(n).im().is_zero());
      for (long m = 2; m <= 6; ++m) {
        for (long n = 2; m * n <= 40; ++n) {
          if (std::gcd(m, n) != 1) continue;
          mp::Complex prod = f.a(m) * f.a(n);
          CHECK(mp::abs(f.a(m * n) - prod) < mp::exp2i(-200, p) * (mp::abs(prod) + 1L));
        }
      }
      mp::Real rel = f.a_real(4) - f.a_real(2) * f.a_real(2) + mp::pow(mp::Real(2L, p), k - 1);
      CHECK(mp::abs(rel) < mp::exp2i(-200, p) * mp::pow(mp::Real(2L, p), k));
    }
  }
  CHECK_THROWS_AS(eigenforms(42, 20, 128), BadWeight);
}

TEST_CASE("Rankin-Cohen brackets") {
  long order = 40;
  auto e4 = eisenstein_qexp(4, order), e6 = eisenstein_qexp(6, order);
  auto d = delta_qexp(order);
  CHECK(rankin_cohen(e4, e6, 0) == e4 * e6);
  auto b = rankin_cohen(e4, e6, 1);
  CHECK(b.weight() == 12);
  CHECK(b.series() == (BigRational(-3456) * d.series()));
  auto g1 = e4 * e4, g2 = eisenstein_qexp(8, order);
  for (unsigned n = 0; n <= 4; ++n) {
    auto lhs = rankin_cohen(g1, g2, n);
    auto rhs = rankin_cohen(g2, g1, n);
    BigRational sign(n % 2 ? -1 : 1);
    CHECK(lhs.series() == sign * rhs.series());
  }
  // constant term vanishes for n > 0
  std::vector<ModularForm> inputs{e4, e6, d, e4 * e6, d * e4, eisenstein_qexp(10, order)};
  for (auto& x : inputs)
    for (auto& y : inputs)
      for (unsigned n = 1; n <= 3; ++n) CHECK(rankin_cohen(x, y, n)[0].is_zero());
}

TEST_CASE("cuspidal projection") {
  long order = 30;
  auto e4 = eisenstein_qexp(4, order), e8 = eisenstein_qexp(8, order);
  auto proj = cuspidal_projection_exact(e4 * e8);
  CHECK(proj.cuspidal());
  CHECK(proj.series() == BigRational(432000, 691) * delta_qexp(order).series());
  auto d = delta_qexp(order);
  CHECK(cuspidal_projection_exact(d) == d);
  CHECK(cuspidal_projection_exact(eisenstein_qexp(16, order)).series().is_zero());
  auto coords = cusp_coordinates(cuspidal_projection_exact(e4 * eisenstein_qexp(20, order)));
  CHECK(coords.size() == 2);
}
