#include <doctest.h>

#include "eiskern/error.hpp"
#include "eiskern/lfunc/petersson.hpp"
#include "eiskern/lfunc/spectral.hpp"
#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/periods/periods.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::periods;
using namespace testsupport;

namespace {

const PrecisionProfile& p256() {
  static PrecisionProfile p = PrecisionProfile::defaults();
  return p;
}

const PrecisionProfile& p512() {
  static PrecisionProfile p = PrecisionProfile::with_bits(512);
  return p;
}

BigRational q(const char* s) { return BigRational::parse(s); }

std::vector<Complex> weight24_thetas(Bits prec) {
  std::vector<Complex> out;
  for (const auto& f : *lfunc::eigenbasis(24, p256())) out.push_back(f.a(2).with_prec(prec));
  return out;
}

}  // namespace

TEST_CASE("continued-fraction reconstruction") {
  auto half = rational_reconstruct(Complex(0.5, 0.0, 256));
  CHECK(half.verdict == Verdict::Rational);
  CHECK(half.reconstructed == q("1/2"));

  auto pi = rational_reconstruct(Complex(mp::pi(256)), 1000000);
  CHECK(pi.verdict == Verdict::Inconclusive);
  CHECK(pi.reconstructed == q("1146408/364913"));
  CHECK(pi.convergents.size() >= 6);

  Real x = Real(q("691/2730"), 300);
  auto r = rational_reconstruct(Complex(x));
  CHECK(r.verdict == Verdict::Rational);
  CHECK(r.reconstructed == q("691/2730"));
  CHECK(r.residual <= r.tol);

  auto neg = rational_reconstruct(Complex(Real(q("-73728/3455"), 256)));
  CHECK(neg.verdict == Verdict::Rational);
  CHECK(neg.reconstructed == q("-73728/3455"));

  auto cx_in = rational_reconstruct(Complex(Real(q("1/3"), 256), Real(q("1/1000"), 256)));
  CHECK(cx_in.verdict == Verdict::Inconclusive);

  auto big = rational_reconstruct(Complex(Real(q("1/123456789"), 256)));
  CHECK(big.verdict == Verdict::Inconclusive);
}

TEST_CASE("quadratic field reconstruction") {
  Bits wp = 300;
  auto th = weight24_thetas(wp);
  std::vector<Complex> vals;
  for (const auto& t : th) vals.push_back(Complex(Real(q("3/7"), wp)) + Complex(Real(q("5/11"), wp)) * t);
  auto c = field_reconstruct(vals, th, kDefaultDMax, mp::exp2i(-140, wp));
  CHECK(c.verdict == Verdict::Rational);
  REQUIRE(c.coords.size() == 2);
  CHECK(c.coords[0].reconstructed == q("3/7"));
  CHECK(c.coords[1].reconstructed == q("5/11"));
  vals[1] += Real(q("1/1000"), wp);
  CHECK(field_reconstruct(vals, th, kDefaultDMax, mp::exp2i(-140, wp)).verdict == Verdict::Inconclusive);
}

TEST_CASE("period pair of Delta") {
  auto a = period_pair(12, 0, p256());
  CHECK(a.product_residual <= p256().tol());
  CHECK(mp::abs(a.omega_minus) > 0L);
  CHECK(mp::abs(a.omega_plus) > 0L);
  CHECK(a.err_est <= p256().tol());
  auto b = period_pair(12, 0, p512());
  Real tol = mp::exp2i(-200, 256);
  CHECK(mp::abs(b.omega_plus.with_prec(256) - a.omega_plus) <= tol * mp::abs(a.omega_plus));
  CHECK(mp::abs(b.omega_minus.with_prec(256) - a.omega_minus) <= tol * mp::abs(a.omega_minus));
  CHECK_THROWS_AS(period_pair(14, 0, p256()), BadWeight);
  CHECK_THROWS_AS(period_pair(12, 1, p256()), OutOfDomain);
}

TEST_CASE("critical ratios of Delta") {
  auto t = manin_table(12, 0, p256());
  CHECK(t.all_certified);
  REQUIRE(t.entries.size() == 11);
  const char* expected[] = {"73728/3455", "1",        "2048/225", "25/48",    "1024/175",  "5/12",
                            "1024/175",   "25/48",    "2048/225", "1",        "73728/3455"};
  for (std::size_t i = 0; i < 11; ++i) {
    const auto& e = t.entries[i];
    CHECK(e.plus == (e.s % 2 == 0));
    REQUIRE(e.cert.coords.size() == 1);
    CHECK(e.cert.coords[0].reconstructed == q(expected[i]));
    CHECK(e.cert.coords[0].reconstructed.den() < 10000);
  }
  // L*(f, k-1)/omega_- is c_f itself.
  CHECK(mp::abs(t.entries[10].ratio - t.periods.c_f) <= p256().tol());
  auto t2 = manin_table(12, 0, p512());
  CHECK(same_reconstruction(t, t2));
}

TEST_CASE("critical ratios in other one-dimensional weights") {
  for (int k : {16, 18}) {
    auto t = manin_table(k, 0, p256());
    CHECK(t.all_certified);
    CHECK(t.entries.size() == static_cast<std::size_t>(k - 1));
  }
  auto t = manin_table(18, 0, p256());
  CHECK(t.entries[8].cert.coords[0].reconstructed == q("0"));
  CHECK(t.entries[0].cert.coords[0].reconstructed == q("-1179648000/43867"));
}

TEST_CASE("weight 24 ratios lie in the coefficient field") {
  auto t = manin_table(24, 0, p256(), 1000000000000000L);
  for (const auto& e : t.entries) {
    if (e.s == 1 || e.s == 23) continue;
    CHECK(e.cert.verdict == Verdict::Rational);
  }
  CHECK(t.entries[3].cert.coords[0].reconstructed == q("59221/630000"));
  CHECK(t.entries[3].cert.coords[1].reconstructed == q("1/15120000"));
  CHECK(t.entries[8].cert.coords[1].reconstructed == q("6815744/7929295"));
}

TEST_CASE("inner products with rational cusp forms") {
  auto delta = lfunc::eigenbasis(12, p256())->front();
  auto g = modforms::cuspidal_projection_exact(modforms::eisenstein_qexp(4, 80) * modforms::eisenstein_qexp(8, 80));
  auto ip = lfunc::petersson_inner(g, delta, p256());
  auto nrm = lfunc::petersson_norm_cached(12, 0, p256());
  auto c = rational_reconstruct(Complex(ip.value / nrm.value), kDefaultDMax, p256().tol());
  CHECK(c.verdict == Verdict::Rational);
  CHECK(c.reconstructed == g[1]);

  auto e4 = modforms::eisenstein_qexp(4, 80);
  auto g24 = modforms::delta_qexp(80) * e4 * e4 * e4;
  auto basis = lfunc::eigenbasis(24, p256());
  std::vector<Complex> ratios;
  for (int j = 0; j < 2; ++j) {
    auto ipj = lfunc::petersson_inner(g24, (*basis)[static_cast<std::size_t>(j)], p256());
    ratios.push_back(Complex(ipj.value / lfunc::petersson_norm_cached(24, j, p256()).value));
  }
  auto fc = field_reconstruct(ratios, weight24_thetas(p256().P), kDefaultDMax, p256().tol());
  CHECK(fc.verdict == Verdict::Rational);
}

TEST_CASE("values outside the critical strip") {
  for (double s : {14.0, 16.0, 0.0, -2.0}) {
    auto a = kdkd_check(12, 0, Complex(s, 0.0, 300), p256());
    CHECK(a.decidable);
    CHECK(a.cert_plus.verdict == Verdict::Rational);
    CHECK(a.cert_minus.verdict == Verdict::Rational);
    CHECK(a.cert_plus.coords[0].reconstructed == q("3455/73728"));
    CHECK(a.cert_minus.coords[0].reconstructed == q("1"));
    CHECK(a.identity_residual <= p256().tol());
  }
  auto b = kdkd_check(12, 0, Complex(16.0, 0.0, 600), p512());
  CHECK(same_reconstruction(kdkd_check(12, 0, Complex(16.0, 0.0, 300), p256()).cert_plus, b.cert_plus));
  auto c = kdkd_check(12, 0, Complex(6.0, 0.0, 300), p256());
  CHECK(mp::abs(c.over_plus - Complex(Real(q("5/12"), 256))) <= p256().tol());
  auto d = kdkd_check(12, 0, Complex(2.5, 1.0, 300), p256());
  CHECK_FALSE(d.decidable);
  CHECK(d.cert_plus.verdict == Verdict::Inconclusive);
  CHECK_FALSE(d.note.empty());
  CHECK(d.identity_residual <= p256().tol());
}

TEST_CASE("twisted periods") {
  auto zero = twisted_period_check(12, 0, 5, BigRational(0L), p256());
  CHECK(zero.cert_alpha.coords[0].reconstructed == q("0"));
  CHECK(zero.cert_beta.coords[0].reconstructed == q("1024/175"));
  auto zero6 = twisted_period_check(12, 0, 6, BigRational(0L), p256());
  CHECK(zero6.cert_alpha.coords[0].reconstructed == q("-5/12"));

  auto a = twisted_period_check(12, 0, 5, q("1/3"), p256());
  CHECK(a.cert_alpha.verdict == Verdict::Rational);
  CHECK(a.cert_beta.verdict == Verdict::Rational);
  CHECK(a.residual <= p256().tol());
  auto a512 = twisted_period_check(12, 0, 5, q("1/3"), p512());
  CHECK(same_reconstruction(a.cert_alpha, a512.cert_alpha));
  CHECK(same_reconstruction(a.cert_beta, a512.cert_beta));

  // Conjugation: alpha(-p/q) = (-1)^u alpha(p/q), beta(-p/q) = -(-1)^u beta(p/q).
  for (int u : {5, 6}) {
    auto x = twisted_period_check(12, 0, u, q("2/7"), p256());
    auto y = twisted_period_check(12, 0, u, q("-2/7"), p256());
    BigRational sign = u % 2 ? BigRational(-1L) : BigRational(1L);
    CHECK(x.cert_alpha.verdict == Verdict::Rational);
    CHECK(y.cert_alpha.coords[0].reconstructed == sign * x.cert_alpha.coords[0].reconstructed);
    CHECK(y.cert_beta.coords[0].reconstructed == -sign * x.cert_beta.coords[0].reconstructed);
  }
  CHECK_THROWS_AS(twisted_period_check(12, 0, 0, q("1/3"), p256()), OutOfDomain);
  CHECK_THROWS_AS(twisted_period_check(12, 0, 12, q("1/3"), p256()), OutOfDomain);
}
