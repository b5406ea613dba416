#include <doctest.h>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/precision.hpp"
#include "eiskern/mpcore/special.hpp"
#include "oracles/bernoulli_recurrence.hpp"
#include "oracles/special_oracles.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::mp;
using testsupport::close_abs;
using testsupport::close_rel;
using testsupport::cx;
using testsupport::tol_bits;

TEST_CASE("BigRational canonical form and parsing") {
  BigRational q(BigInt(6), BigInt(-4));
  CHECK(q.to_string() == "-3/2");
  CHECK(q.den() > 0);
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK(BigRational::parse("-7").is_integer());
  CHECK_THROWS_AS(BigRational::parse("x/3"), BadData);
  CHECK_THROWS_AS(BigRational(1, 0), OutOfDomain);
}

TEST_CASE("BigRational field axioms on random inputs") {
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    auto pick = [&] {
      long n = d(testsupport::rng()), m = d(testsupport::rng());
      return BigRational(n, m == 0 ? 1 : m);
    };
    BigRational a = pick(), b = pick(), c = pick();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == BigRational(0));
    if (!a.is_zero()) CHECK(a / a == BigRational(1));
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == BigRational(1));
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(3) == BigRational(0));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  auto table = oracle::bernoulli_table(80);
  for (unsigned long n = 0; n <= 80; ++n) CHECK(bernoulli(n) == BigRational(table[n]));
}

TEST_CASE("divisor_sigma") {
  CHECK(divisor_sigma(1, 6) == BigRational(12));
  CHECK(divisor_sigma(3, 2) == BigRational(9));
  CHECK(divisor_sigma(0, 97) == BigRational(2));
  CHECK(divisor_sigma(-1, 6) == BigRational(2));
  Complex v = divisor_sigma(Complex(3L, 128), 12);
  CHECK(close_abs(v, Complex(Real(divisor_sigma(3, 12), 128)), tol_bits(100, 128)));
}

TEST_CASE("precision profile defaults") {
  PrecisionProfile p = PrecisionProfile::defaults();
  CHECK(p.P == 256);
  CHECK(p.N_q == 64);
  CHECK(p.H_group == 200);
  CHECK(p.tol_bits == 128);
  double lhs = -2.0 * M_PI * static_cast<double>(p.M_tail);
  CHECK(lhs < -256.0 * std::log(2.0));
  PrecisionProfile bad;
  bad.P = 32;
  CHECK_THROWS_AS(bad.normalized(), InsufficientPrecision);
  PrecisionProfile tight;
  tight.tol_bits = 250;
  CHECK_THROWS_AS(tight.normalized(), InsufficientPrecision);
}

TEST_CASE("complex numbers reject non-finite parts and follow the principal branch") {
  Real nan(128);
  mpfr_set_nan(nan.get());
  CHECK_THROWS_AS(Complex(nan, Real(0L, 128)), OutOfDomain);
  Complex m1(-1L, 128);
  Complex r = cpow(m1, Complex(0.5, 0, 128));
  CHECK(close_abs(r, Complex::i(128), tol_bits(120, 128)));
  Complex negzero(Real(-1L, 128), -Real(0L, 128));
  CHECK(arg(negzero) == pi(128));
  Complex a = cx(0.3, -2.0, 128);
  CHECK(close_abs(cpow(a, Complex(3L, 128)), ipow(a, 3), tol_bits(115, 128)));
  Complex mixed = Complex(1L, 80) + Complex(1L, 200);
  CHECK(mixed.prec() == 80);
}

TEST_CASE("zeta special values and pole") {
  Bits p = 256;
  Real pi2 = pi(p) * pi(p) / 6L;
  CHECK(close_abs(zeta(Complex(2L, p)), Complex(pi2), tol_bits(250, p)));
  CHECK(close_abs(zeta(Complex(0L, p)), Complex(Real(-0.5, p)), tol_bits(250, p)));
  CHECK(close_abs(zeta(Complex(-1L, p)), Complex(Real(BigRational(-1, 12), p)), tol_bits(250, p)));
  CHECK(zeta(Complex(-4L, p)).is_zero());
  CHECK_THROWS_AS(zeta(Complex(1L, p)), PoleAtOne);
  Complex near_one = Complex(1L, p) + Complex(exp2i(-200, p));
  CHECK_THROWS_AS(zeta(near_one), PoleAtOne);
  Complex rho = cx("0.5", "14.134725141734693790457251983562470270784257115699", p);
  CHECK(abs(zeta(rho)) < Real(1e-45, p));
  // reflection region against the functional equation
  Complex s = cx(-3.7, 2.2, p);
  Complex lhs = zeta(s);
  Complex rhs = cpow(Complex(2L, p), s) * cpow(Complex(pi(p)), s - 1L) * sin(s * pi(p) / 2L) *
                gamma(1L - s) * zeta(1L - s);
  CHECK(close_rel(lhs, rhs, tol_bits(240, p)));
}

TEST_CASE("zeta(3) against a direct-sum oracle") {
  Bits p = 160;
  Real oracle_value = oracle::zeta_direct(3, 100000, p);
  CHECK(close_abs(zeta(Complex(3L, p)), Complex(oracle_value), Real(1e-30, p)));
}

TEST_CASE("gamma and log_gamma") {
  Bits p = 256;
  Complex half(Real(0.5, p));
  CHECK(close_abs(gamma(half), Complex(sqrt(pi(p))), tol_bits(248, p)));
  for (int i = 0; i < 20; ++i) {
    Complex s = cx(testsupport::uniform(-6, 12), testsupport::uniform(-15, 15), p);
    Complex g = gamma(s);
    CHECK(close_rel(gamma(s + 1L), s * g, tol_bits(240, p)));
    Complex refl = gamma(s) * gamma(1L - s) * sin(s * pi(p));
    CHECK(close_rel(refl, Complex(pi(p)), tol_bits(235, p)));
    if (!s.im().is_zero()) {
      Complex d = log_gamma(s + 1L) - log_gamma(s) - log(s);
      CHECK(abs(d) < tol_bits(230, p));
    }
  }
  Real x(7.25, p);
  Real mp_lg(p);
  int sign = 0;
  mpfr_lgamma(mp_lg.get(), &sign, x.get(), MPFR_RNDN);
  CHECK(close_abs(log_gamma(Complex(x) + Complex(0.0, 0.0, p)), Complex(mp_lg), tol_bits(245, p)));
  Complex lg = log_gamma(cx(7.25, 1e-45, p));
  CHECK(close_abs(Complex(lg.re()), Complex(mp_lg), tol_bits(240, p)));
  CHECK_THROWS_AS(gamma(Complex(-2L, p)), OutOfDomain);
  CHECK(rgamma(Complex(-3L, p)).is_zero());
}

TEST_CASE("incomplete gamma identities") {
  Bits p = 256;
  Real tol = tol_bits(235, p);
  for (double xv : {0.3, 1.0, 6.283, 40.0}) {
    Real x(xv, p);
    CHECK(close_rel(inc_gamma_upper(Complex(1L, p), x), Complex(exp(-x)), tol));
    for (int i = 0; i < 6; ++i) {
      Complex s = cx(testsupport::uniform(0.2, 20), testsupport::uniform(-4, 4), p);
      Complex lhs = inc_gamma_upper(s + 1L, x);
      Complex rhs = s * inc_gamma_upper(s, x) + cpow(x, s) * exp(-x);
      CHECK(close_rel(lhs, rhs, tol));
      Complex full = inc_gamma_upper(s, x) + inc_gamma_lower(s, x);
      CHECK(close_rel(full, gamma(s), tol));
    }
  }
  Complex s0(0L, p);
  CHECK(close_rel(inc_gamma_upper(s0 - 2L, Real(6.5, p)) * -2L,
                  inc_gamma_upper(s0 - 1L, Real(6.5, p)) - cpow(Real(6.5, p), s0 - 2L) * exp(Real(-6.5, p)),
                  tol));
  CHECK_THROWS_AS(inc_gamma_upper(Complex(1L, p), Real(0L, p)), OutOfDomain);
}

TEST_CASE("incomplete gamma against quadrature and MPFR") {
  Bits p = 192;
  Complex s(Real(0.5, p));
  Complex q = oracle::inc_gamma_quadrature(s, Real(1L, p), 1.0 / 256, 5.0);
  CHECK(close_rel(inc_gamma_upper(s, Real(1L, p)), q, Real(1e-50, p)));
  Real ref(p);
  Real a(13.5, p), x(6.0, p);
  mpfr_gamma_inc(ref.get(), a.get(), x.get(), MPFR_RNDN);
  CHECK(close_rel(Complex(inc_gamma_upper(a, x)), Complex(ref), tol_bits(180, p)));
  Complex sc = cx(2.5, 3.0, p);
  Complex qc = oracle::inc_gamma_quadrature(sc, Real(2L, p), 1.0 / 256, 5.0);
  CHECK(close_rel(inc_gamma_upper(sc, Real(2L, p)), qc, Real(1e-50, p)));
}

TEST_CASE("Bessel K") {
  Bits p = 256;
  Real tol = tol_bits(230, p);
  Complex half(Real(0.5, p));
  for (double xv : {0.05, 1.0, 7.0, 60.0}) {
    Real x(xv, p);
    Complex closed(sqrt(pi(p) / (2L * x)) * exp(-x));
    CHECK(close_rel(bessel_k(half, x), closed, tol));
  }
  Complex nu = cx(1.3, 0.7, p);
  CHECK(close_rel(bessel_k(nu, Real(2L, p)), bessel_k(-nu, Real(2L, p)), tol));
  Complex nu2 = cx(0.0, 2.0, p);
  Complex series = oracle::bessel_k_series(nu2, Real(1L, p));
  CHECK(close_rel(bessel_k(nu2, Real(1L, p)), series, Real(1e-60, p)));
  Complex nu3 = cx(0.0, 9.5, p);
  BesselKTable table(nu3, Real(0.5, p), Real(40L, p));
  for (double xv : {0.5, 3.0, 17.0, 40.0})
    CHECK(close_abs(table(Real(xv, p)), bessel_k(nu3, Real(xv, p)), tol_bits(236, p)));
}

TEST_CASE("theta symmetry") {
  Bits p = 256;
  for (int i = 0; i < 20; ++i) {
    Complex s = cx(testsupport::uniform(-3, 4), testsupport::uniform(-10, 10), p);
    Complex a = theta(s / 2L);
    Complex b = theta((1L - s) / 2L);
    CHECK(close_rel(a, b, tol_bits(128, p)));
  }
}

TEST_CASE("Lipschitz sums") {
  Bits p = 256;
  Complex tau = cx(0.2, 0.6, p);
  Complex s2(2L, p);
  Complex sn = sin(tau * pi(p));
  Complex closed = Complex(pi(p) * pi(p)) / (sn * sn);
  CHECK(close_rel(lipschitz_sum(tau, s2), closed, tol_bits(240, p)));
  Complex s = cx(4.5, 1.5, p);
  CHECK(close_rel(lipschitz_sum(tau + 1L, s), lipschitz_sum(tau, s), tol_bits(240, p)));
  Bits q = 128;
  Complex direct = oracle::lipschitz_direct(Complex::i(q), 4, 20000);
  CHECK(close_rel(lipschitz_sum(Complex::i(q), Complex(4L, q)), direct, Real(1e-20, q)));
  CHECK_THROWS_AS(lipschitz_sum(cx(0.1, 1e-5, p), s, 1000), NonConvergence);
  CHECK_THROWS_AS(lipschitz_sum(tau, Complex(1L, p)), OutOfDomain);
}

TEST_CASE("special functions are pure") {
  Bits p = 200;
  Complex s = cx(3.3, -1.7, p);
  Real x(4.0, p);
  CHECK(zeta(s) == zeta(s));
  CHECK(inc_gamma_upper(s, x) == inc_gamma_upper(s, x));
  CHECK(bessel_k(s, x) == bessel_k(s, x));
  CHECK(gamma(s) == gamma(s));
}
