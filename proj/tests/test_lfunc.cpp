#include <doctest.h>

#include "eiskern/error.hpp"
#include "eiskern/lfunc/lvalue.hpp"
#include "eiskern/lfunc/petersson.hpp"
#include "eiskern/lfunc/spectral.hpp"
#include "eiskern/mpcore/special.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::lfunc;
using namespace testsupport;

namespace {

const PrecisionProfile& prof256() {
  static PrecisionProfile p = PrecisionProfile::defaults();
  return p;
}

Complex sign_k(int k, const Complex& z) { return (k / 2) % 2 ? -z : z; }

}  // namespace

TEST_CASE("functional equation at random points") {
  const auto& prof = prof256();
  for (int k : {12, 16, 18}) {
    for (int trial = 0; trial < 4; ++trial) {
      Complex s = cx(uniform(-2.0, k + 2.0), uniform(-6.0, 6.0), prof.work());
      auto f = eigenform_for(k, 0, s, 1, prof);
      Complex ks = Complex(Real(static_cast<long>(k), prof.work())) - s;
      LValue a = lstar(*f, s, prof);
      LValue b = lstar(*f, ks, prof);
      CHECK(close_rel(b.value, sign_k(k, a.value), prof.tol()));
      CHECK(a.err_est < prof.tol());
    }
  }
}

TEST_CASE("conjugation symmetry and reality on the real axis") {
  const auto& prof = prof256();
  Complex s = cx(3.25, 2.5, prof.work());
  auto f = eigenform_for(12, 0, s, 5, prof);
  LValue a = lstar(*f, s, prof);
  LValue b = lstar(*f, mp::conj(s), prof);
  CHECK(close_rel(b.value, mp::conj(a.value), prof.tol()));
  LValue c = lstar(*f, Complex(6L, prof.work()), prof);
  CHECK(mp::abs(c.value.im()) <= prof.tol());
  for (long p : {1L, 2L}) {
    LValue t1 = lstar_twisted(*f, s, BigRational(p, 5), prof);
    LValue t2 = lstar_twisted(*f, mp::conj(s), BigRational(-p, 5), prof);
    CHECK(close_rel(t2.value, mp::conj(t1.value), prof.tol()));
  }
}

TEST_CASE("frozen critical values of Delta") {
  const auto& prof = prof256();
  auto f = eigenform_for(12, 0, Complex(1L, prof.work()), 1, prof);
  Real tol = tol_bits(100, prof.work());
  LValue l1 = lstar(*f, Complex(1L, prof.work()), prof);
  LValue l8 = lstar(*f, Complex(8L, prof.work()), prof);
  CHECK(close_rel(l1.value, cx("0.00595896498957823785383556441581", "0", prof.work()), tol));
  CHECK(close_rel(l8.value, cx("0.00193109920049378400755375722549", "0", prof.work()), tol));
}

TEST_CASE("precision doubling") {
  auto p256 = PrecisionProfile::defaults();
  auto p512 = PrecisionProfile::with_bits(512);
  auto f256 = eigenform_for(12, 0, Complex(11L, 300), 1, p256);
  auto f512 = eigenform_for(12, 0, Complex(11L, 600), 1, p512);
  LValue a = lstar(*f256, Complex(11L, p256.work()), p256);
  LValue b = lstar(*f512, Complex(11L, p512.work()), p512);
  CHECK(close_rel(a.value.with_prec(600), b.value, tol_bits(240, 600)));
}

TEST_CASE("twisted values") {
  const auto& prof = prof256();
  const int k = 12;
  auto f = eigenform_for(k, 0, Complex(6L, prof.work()), 5, prof);
  mp::Bits wp = prof.work();

  SUBCASE("zero twist is the plain value") {
    Complex s = cx(4.5, 1.0, wp);
    CHECK(mp::abs(lstar_twisted(*f, s, BigRational(0), prof).value - lstar(*f, s, prof).value) <= prof.tol());
  }

  SUBCASE("reflection through p -> -p'") {
    for (long q : {2L, 3L, 5L}) {
      for (long p = 1; p < q; ++p) {
        long pinv = 1;
        while ((p * pinv) % q != 1) ++pinv;
        for (Complex s : {cx(3.0, 0.0, wp), cx(5.5, 1.5, wp)}) {
          Complex ks = Complex(Real(static_cast<long>(k), wp)) - s;
          Complex lhs = mp::cpow(Real(q, wp), s) * lstar_twisted(*f, s, BigRational(p, q), prof).value;
          Complex rhs = sign_k(k, mp::cpow(Real(q, wp), ks) *
                                      lstar_twisted(*f, ks, BigRational(-pinv, q), prof).value);
          CHECK(close_rel(lhs, rhs, prof.tol()));
        }
      }
    }
  }

  SUBCASE("sum over b mod 2") {
    Complex s = cx(7.0, 0.5, wp);
    TwistedLSeries ser(*f, s, 2, prof, true);
    Complex sum = ser(0).value + ser(1).value;
    Complex a2 = f->a(2);
    Complex one_minus = Complex(Real(1L, wp)) - s;
    Complex rhs = mp::cpow(Real(2L, wp), one_minus) *
                  (a2 - mp::cpow(Real(2L, wp), Complex(Real(static_cast<long>(k - 1), wp)) - s)) *
                  lstar(*f, s, prof).value;
    CHECK(close_rel(sum, rhs, prof.tol()));
  }

  SUBCASE("sum over b mod 2 against the Dirichlet series") {
    Complex s(Real(20L, wp));
    auto big = eigenform_for(k, 0, s, 1, prof);
    auto wide = eigenbasis(k, prof, 1200);
    const auto& g = wide->front();
    TwistedLSeries ser(*big, s, 2, prof, true);
    Complex sum = ser(0).value + ser(1).value;
    Real direct(0L, wp);
    for (long m = 2; m <= g.order(); m += 2) direct += 2L * g.a(m).re() * mp::pow(Real(m, wp), -20L);
    direct *= mp::gamma(Real(20L, wp)) * mp::pow(2L * mp::pi(wp), -20L);
    CHECK(close_rel(sum, Complex(direct), tol_bits(100, wp)));
  }
}

TEST_CASE("Euler product region is zero free") {
  const auto& prof = prof256();
  for (int k : {12, 16}) {
    auto f = eigenform_for(k, 0, Complex(static_cast<long>(k), prof.work()), 1, prof);
    for (double sigma = k / 2.0 + 0.75; sigma < k + 1.0; sigma += 0.5) {
      LValue v = lstar(*f, cx(sigma, 0.0, prof.work()), prof);
      CHECK(mp::abs(v.value) > 1000L * v.err_est);
    }
  }
}

TEST_CASE("Petersson norm of Delta") {
  const auto& prof = prof256();
  auto basis = eigenbasis(12, prof);
  const auto& delta = basis->front();
  PeterssonNorm q = petersson_norm(delta, prof);
  PeterssonNorm r = petersson_norm_rank_identity(delta, prof);
  CHECK(q.value > 0L);
  CHECK(q.method == NormMethod::StripQuadrature);
  CHECK(r.method == NormMethod::RankIdentity);
  Real frozen = Real::parse("1.0353620568043209223478168122251645932e-6", prof.work());
  CHECK(mp::abs(q.value - frozen) <= tol_bits(110, prof.work()) * frozen);
  CHECK(mp::abs(q.value - r.value) <= q.err_est + r.err_est + prof.tol() * q.value);
  CHECK(q.err_est < prof.tol());
  CHECK(mp::abs(petersson_norm_cached(12, 0, prof).value - q.value) == 0L);
}

TEST_CASE("Petersson norms in dimension two agree across methods") {
  const auto& prof = prof256();
  auto basis = eigenbasis(24, prof);
  REQUIRE(basis->size() == 2);
  for (const auto& f : *basis) {
    PeterssonNorm q = petersson_norm(f, prof);
    PeterssonNorm r = petersson_norm_rank_identity(f, prof);
    CHECK(q.value > 0L);
    CHECK(mp::abs(q.value - r.value) <= q.err_est + r.err_est + prof.tol() * q.value);
  }
}

TEST_CASE("convolution series against the product of L-values") {
  const auto& prof = prof256();
  auto basis = eigenbasis(12, prof, 800);
  const auto& delta = basis->front();
  Real s(3L, prof.work()), w(2L, prof.work());
  ConvolutionCheck full = rankin_convolution_check(delta, s, w, prof, 800);
  ConvolutionCheck half = rankin_convolution_check(delta, s, w, prof, 400);
  CHECK(full.residual <= full.bound);
  CHECK(half.residual <= half.bound);
  CHECK(mp::abs(full.residual - half.residual) <= half.bound);
  CHECK(mp::abs(full.rhs) > 0L);
  CHECK_THROWS_AS(rankin_convolution_check(delta, Real(6L, prof.work()), w, prof, 100), OutOfDomain);
}

TEST_CASE("insufficient coefficients are reported") {
  const auto& prof = prof256();
  auto short_basis = modforms::eigenforms(12, 10, prof.work());
  CHECK_THROWS_AS(lstar(short_basis.front(), Complex(6L, prof.work()), prof), InsufficientPrecision);
  CHECK_THROWS_AS(petersson_norm(short_basis.front(), prof), InsufficientPrecision);
}
