#include <doctest.h>

#include <cmath>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/special.hpp"
#include "eiskern/nonhol/direct.hpp"
#include "eiskern/nonhol/eisenstein.hpp"
#include "eiskern/nonhol/kernel.hpp"
#include "eiskern/nonhol/maass.hpp"
#include "support.hpp"

using namespace eiskern;
using namespace eiskern::nonhol;
using namespace testsupport;

namespace {

const PrecisionProfile& prof() {
  static PrecisionProfile p = PrecisionProfile::defaults();
  return p;
}

std::string fixture_path() { return std::string(EISKERN_DATA_DIR) + "/maass_synthetic.txt"; }

const MaassFormData& fixture() {
  static MaassFormData d = maass_load(fixture_path());
  return d;
}

MaassFormData single_term(long n_max, double prec) {
  MaassFormData d;
  d.R = Real::parse("13.7797513519", 256);
  d.parity = Parity::Even;
  d.claimed_precision = prec;
  d.source = "single Bessel term";
  for (long n = 1; n <= n_max; ++n) d.nu.push_back(Real(n == 1 ? 1L : 0L, 256));
  return d;
}

std::string header() { return "R 13.7797513519 parity even prec 1e-13\n"; }

}  // namespace

TEST_CASE("theta functional equation theta(s) = theta(1/2 - s)") {
  Bits p = 256;
  for (int i = 0; i < 20; ++i) {
    Complex s = cx(uniform(-3.0, 3.0), uniform(-8.0, 8.0), p);
    Complex a = mp::theta(s), b = mp::theta(Complex(Real(0.5, p)) - s);
    CHECK(close_rel(a, b, tol_bits(200, p)));
  }
}

TEST_CASE("E*(z,s) = E*(z,1-s) at z = i, s = 0.3+2i") {
  Bits p = prof().P;
  Complex z = cx(0.0, 1.0, p), s = cx(0.3, 2.0, p);
  EisensteinValue a = eisenstein_completed(z, s, prof());
  EisensteinValue b = eisenstein_completed(z, Complex(1L, p) - s, prof());
  CHECK(mp::abs(a.value - b.value) <= prof().tol() * mp::max(mp::abs(a.value), Real(1L, p)));
}

TEST_CASE("E*(z,s) = E*(z,1-s) at 20 random points") {
  Bits p = prof().P;
  for (int i = 0; i < 20; ++i) {
    Complex z = cx(uniform(-0.5, 0.5), uniform(0.3, 2.5), p);
    Complex s = cx(uniform(-1.5, 2.5), uniform(-6.0, 6.0), p);
    if (mp::abs(s - Complex(Real(0.5, p))).to_double() < 0.05) continue;
    EisensteinValue a = eisenstein_completed(z, s, prof());
    EisensteinValue b = eisenstein_completed(z, Complex(1L, p) - s, prof());
    Real scale = mp::max(mp::abs(a.value), Real(1L, p));
    CHECK(mp::abs(a.value - b.value) <= Real(1e-30, p) * scale);
  }
}

TEST_CASE("E(z,s): Fourier and lattice routes agree at s = 1.7, z = 1/4 + 2i") {
  Bits p = prof().P;
  PrecisionProfile lp = prof();
  lp.H_group = 2000;
  Complex z = cx(0.25, 2.0, p), s = cx(1.7, 0.0, p);
  EisensteinValue f = eisenstein_nonhol(z, s, EisensteinMethod::Fourier, prof());
  EisensteinValue l = eisenstein_nonhol(z, s, EisensteinMethod::Lattice, lp);
  CHECK(f.method == EisensteinMethod::Fourier);
  CHECK(l.method == EisensteinMethod::Lattice);
  CHECK(mp::abs(f.value - l.value) <= f.err + l.err);
  CHECK(l.err.to_double() < 1e-3);
}

TEST_CASE("E(z,s) is invariant under z -> z+1 and z -> -1/z") {
  Bits p = prof().P;
  Complex z = cx(0.3, 0.7, p), s = cx(0.8, 3.0, p);
  Complex e0 = eisenstein_nonhol(z, s, EisensteinMethod::Fourier, prof()).value;
  Complex e1 = eisenstein_nonhol(z + Complex(1L, p), s, EisensteinMethod::Fourier, prof()).value;
  Complex e2 = eisenstein_nonhol(Complex(-1L, p) / z, s, EisensteinMethod::Fourier, prof()).value;
  CHECK(close_rel(e0, e1, prof().tol()));
  CHECK(close_rel(e0, e2, prof().tol()));
}

TEST_CASE("x-average of E(z,s) reproduces the constant term") {
  Bits p = prof().P;
  Complex z = cx(0.1, 1.3, p), s = cx(0.7, 1.1, p);
  Complex avg = eisenstein_x_average(z, s, 8, prof());
  Complex y = Complex(Real(1.3, p));
  Complex one(1L, p);
  Complex constant = mp::cpow(y, s) + mp::theta(one - s) / mp::theta(s) * mp::cpow(y, one - s);
  // Modes with 8 | m survive; the first is e^{-2 pi 8 y} relative.
  double bound = 10.0 * std::exp(-2.0 * M_PI * 8 * 1.3);
  CHECK(mp::abs(avg - constant).to_double() < bound);
}

TEST_CASE("E(z,s) domain errors") {
  Bits p = prof().P;
  Complex z = cx(0.0, 1.0, p);
  CHECK_THROWS_AS(eisenstein_nonhol(z, cx(1.0, 0.0, p), EisensteinMethod::Fourier, prof()), PoleNear);
  CHECK_THROWS_AS(eisenstein_nonhol(z, cx(1e-10, 0.0, p), EisensteinMethod::Fourier, prof()), PoleNear);
  CHECK_THROWS_AS(eisenstein_nonhol(z, cx(0.9, 0.0, p), EisensteinMethod::Lattice, prof()), DomainError);
  CHECK_THROWS_AS(eisenstein_nonhol(cx(0.0, -1.0, p), cx(2.0, 0.0, p), EisensteinMethod::Fourier, prof()), OutOfDomain);
}

TEST_CASE("K(z;s,s') = K(z;s',s) at five points, split route against group sum") {
  cd s(0.8, 0.0), sp(6.5, 0.0);
  for (cd z : {cd(0, 1), cd(0.3, 1.2), cd(-0.2, 0.9), cd(0.1, 2.0), cd(0.45, 0.95)}) {
    KernelValue a = kernel_K(z, s, sp);
    KernelValue b = kernel_K_direct(z, sp, s);
    CHECK(std::abs(a.value - b.value) < 1e-10 * std::abs(a.value));
    CHECK(a.rho == doctest::Approx(0.8));
  }
}

TEST_CASE("K via the split agrees with the brute-force group sum") {
  cd z(0, 1), s(1.2, 0.0), sp(6.5, 0.0);
  KernelValue a = kernel_K(z, s, sp);
  KernelValue b = kernel_K_bruteforce(z, s, sp, 800);
  CHECK(std::abs(a.value - b.value) < 1e-4 * std::abs(a.value));
  CHECK(std::abs(a.value - b.value) < 4.0 * b.err);
}

TEST_CASE("K at complex arguments: split route against group sum") {
  cd z(0.2, 1.1), s(1.1, 0.7), sp(7.5, -0.4);
  KernelValue a = kernel_K(z, s, sp);
  KernelValue b = kernel_K_direct(z, s, sp);
  CHECK(std::abs(a.value - b.value) < 1e-9 * std::abs(a.value));
}

TEST_CASE("Laplacian identity for K at z = i") {
  LaplacianCheck c = laplacian_identity(cd(0, 1), 0.8, 6.5);
  CHECK(c.residual < 1e-6);
}

TEST_CASE("K# decays along the imaginary axis within the bound slope") {
  SharpDecay d = sharp_decay(0.8, 6.5, {2.0, 4.0, 8.0});
  REQUIRE(d.slope.size() == 2);
  for (double sl : d.slope) CHECK(sl <= d.bound_slope + 0.5);
  CHECK(d.magnitude[2] < d.magnitude[1]);
  CHECK(d.magnitude[1] < d.magnitude[0]);
}

TEST_CASE("K outside the split domain") {
  CHECK_THROWS_AS(kernel_K(cd(0, 1), 0.8, 5.5), NonConvergence);
  CHECK_THROWS_AS(kernel_K(cd(0, 1), 0.4, 9.0), NonConvergence);
}

TEST_CASE("double series: pair sum is invariant under z -> z+1, -1/z and symmetric in s, s'") {
  cd z(0.15, 1.05), w(3.0, 0.5), s(1.4, 0.2), sp(2.2, -0.3);
  DirectSum a = nonhol_dbl_eis_direct(z, w, s, sp, 12);
  DirectSum b = nonhol_dbl_eis_direct(z + 1.0, w, s, sp, 12);
  DirectSum c = nonhol_dbl_eis_direct(-1.0 / z, w, s, sp, 12);
  DirectSum d = nonhol_dbl_eis_direct(z, w, sp, s, 12);
  CHECK(std::abs(a.value - b.value) <= a.err + b.err);
  CHECK(std::abs(a.value - c.value) <= a.err + c.err);
  CHECK(std::abs(a.value - d.value) < 1e-12 * std::abs(a.value));
  CHECK(a.worst_pair_ratio <= 1.0 + 1e-9);
  CHECK(a.pairs > 0);
}

TEST_CASE("double series: pair sum and rearranged route agree") {
  cd z(0.1, 1.1), w(10.0, 0.0), s(1.5, 0.0), sp(6.6, 0.0);
  DirectSum a = nonhol_dbl_eis_direct(z, w, s, sp, 16);
  DirectSum r = nonhol_dbl_eis_rearranged(z, w, s, sp, 16);
  CHECK(r.err < 1e-10);
  CHECK(std::abs(a.value - r.value) <= a.err + r.err);
  DirectSum r1 = nonhol_dbl_eis_rearranged(z + 1.0, w, s, sp, 16);
  DirectSum r2 = nonhol_dbl_eis_rearranged(-1.0 / z, w, s, sp, 16);
  CHECK(std::abs(r.value - r1.value) <= r.err);
  CHECK(std::abs(r.value - r2.value) <= r.err);
}

TEST_CASE("double series domain") {
  CHECK_THROWS_AS(nonhol_dbl_eis_direct(cd(0, 1), 3.0, 0.9, 2.0), OutOfDomain);
  CHECK_THROWS_AS(nonhol_dbl_eis_direct(cd(0, 1), -2.0, 1.2, 2.0), OutOfDomain);
  CHECK_THROWS_AS(nonhol_dbl_eis_rearranged(cd(0, 1), 3.0, 1.5, 1.5), OutOfDomain);
}

TEST_CASE("Hecke relation: sum of T_n K / n^{w+s+s'-1/2} against zeta zeta E") {
  cd z(0.1, 1.1), w(10.0, 0.0), s(1.5, 0.0), sp(6.6, 0.0);
  HeckeRelation h = hecke_relation_check(z, w, s, sp, 10);
  CHECK(h.residual < 1e-3);
  CHECK(h.residual < 1e-9);
  CHECK(std::abs(h.lhs - h.lhs_pairs) <= h.lhs_err + h.lhs_pairs_err);
  // The normalisation (1/2, n^{w-1/2}) is off by a factor near 0.544 here.
  CHECK(h.residual_alt > 0.1);
  CHECK(h.factor_alt.real() == doctest::Approx(0.5444).epsilon(0.01));
}

TEST_CASE("divisor identity: one-sided partial sums converge to half the two-sided value") {
  cd s(0.7, 0.3), w(3.0, 0.0);
  DivisorIdentity d = divisor_identity(s, w, 2000);
  CHECK(std::abs(d.partial - d.one_sided) <= d.tail_bound);
  CHECK(std::abs(d.two_sided - 2.0 * d.one_sided) < 1e-15 * std::abs(d.one_sided));
  CHECK(std::abs(d.partial - d.two_sided) > 10.0 * d.tail_bound);
  CHECK_THROWS_AS(divisor_identity(s, cd(1.5, 0.0), 10), OutOfDomain);
}

TEST_CASE("Maass parser accepts the synthetic fixture") {
  const MaassFormData& d = fixture();
  CHECK(d.parity == Parity::Even);
  CHECK(d.nu.size() == 80);
  CHECK(d.claimed_precision == doctest::Approx(1e-13));
  CHECK(d.source == fixture_path());
  CHECK(maass_hecke_defect(d) < 1e-14);
}

TEST_CASE("Maass parser rejects malformed data") {
  CHECK_THROWS_AS(maass_parse("", "t"), BadData);
  CHECK_THROWS_AS(maass_parse("R 13.7 parity even\n1 1\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse("R 13.7 parity neutral prec 1e-10\n1 1\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse("R x parity even prec 1e-10\n1 1\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 1\n1 1\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 1\n3 0.5\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 0.5\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 1\n2 abc\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 1\n2 0.5\n3 0.1\n4 0.9\n", "t"), BadData);
  CHECK_THROWS_AS(maass_parse(header() + "1 1\n2 0.5 0.1\n", "t"), BadData);
  CHECK_THROWS_AS(maass_load("/nonexistent/maass.txt"), BadData);
  // nu(4) = nu(2)^2 - 1 is consistent.
  MaassFormData ok = maass_parse(header() + "# comment\n\n1 1\n2 0.5\n3 0.1\n4 -0.75\n", "t");
  CHECK(ok.nu.size() == 4);
}

TEST_CASE("Maass L*: odd forms are unsupported") {
  MaassFormData d = maass_parse("R 9.53 parity odd prec 1e-10\n1 1\n2 0.5\n", "t");
  CHECK(d.parity == Parity::Odd);
  CHECK_THROWS_AS(maass_lstar(d, cx(0.7, 0.0, 128), prof()), ParityUnsupported);
}

TEST_CASE("Maass L*: functional equation at s = 0.7 on the fixture") {
  const MaassFormData& d = fixture();
  MaassLValue a = maass_lstar(d, cx(0.7, 0.0, 128), prof());
  MaassLValue b = maass_lstar(d, cx(0.3, 0.0, 128), prof());
  CHECK(mp::abs(a.value - b.value) <= a.err + b.err);
  CHECK(a.err <= Real(10.0 * d.claimed_precision, 64) * mp::abs(a.value));
  CHECK(mp::abs(a.value.im()).is_zero());
  CHECK(a.automorphy_defect > 1e-3);
}

TEST_CASE("Maass L*: conjugation and the functional equation at complex s") {
  const MaassFormData& d = fixture();
  Complex s = cx(0.7, 2.5, 128);
  MaassLValue a = maass_lstar(d, s, prof());
  MaassLValue b = maass_lstar(d, mp::conj(s), prof());
  MaassLValue c = maass_lstar(d, Complex(1L, 128) - s, prof());
  CHECK(mp::abs(a.value - mp::conj(b.value)) <= a.err + b.err);
  CHECK(mp::abs(a.value - c.value) <= a.err + c.err);
}

TEST_CASE("Maass L*: single Bessel term against direct quadrature") {
  MaassFormData d = single_term(8, 1e-30);
  Complex s = cx(0.7, 0.4, 192);
  MaassLValue v = maass_lstar(d, s, prof());
  // 4 [I(s) + I(1-s)], I(a) = int_1^infty K_{iR}(2 pi y) y^{a-1} dy
  //                         = int_0^infty cos(R t) (2 pi cosh t)^{-a} Gamma(a, 2 pi cosh t) dt.
  Bits b = 240;
  Real R = d.R.with_prec(b), two_pi = 2L * mp::pi(b);
  auto I = [&](const Complex& a) {
    Real h(1L, b);
    h /= 64L;
    Complex acc(b);
    for (long j = 0;; ++j) {
      Real t = h * j;
      Real x = two_pi * mp::cosh(t);
      Complex f = mp::cpow(Complex(x), -a) * mp::inc_gamma_upper(a, x) * mp::cos(R * t);
      acc += j == 0 ? f / 2L : f;
      if (x.to_double() > 250.0) break;
    }
    return acc * h;
  };
  Complex sb = s.with_prec(b);
  Complex oracle = 4L * (I(sb) + I(Complex(1L, b) - sb));
  CHECK(mp::abs(v.value - oracle) <= v.err + Real(1e-40, b));
}

TEST_CASE("inner-product check: zero coefficients give zero") {
  MaassFormData d = single_term(8, 1e-13);
  d.nu[0] = Real(0L, 256);
  CplOptions opt;
  opt.nx = 4;
  opt.ny = 3;
  opt.y_top = 2;
  opt.H = 4;
  CplReport r = cpl_inner_product_check(d, cx(1.5, 0.0, 96), cx(2.5, 0.0, 96), prof(), opt);
  CHECK(r.inner == 0.0);
  CHECK(r.predicted == 0.0);
}

TEST_CASE("inner-product check on the synthetic fixture: report, caveats, s <-> s' symmetry") {
  CplOptions opt;
  opt.nx = 4;
  opt.ny = 3;
  opt.y_top = 2;
  opt.H = 4;
  CplReport r = cpl_inner_product_check(fixture(), cx(1.5, 0.0, 96), cx(2.5, 0.0, 96), prof(), opt);
  CHECK(std::isfinite(r.inner));
  CHECK(std::isfinite(r.predicted));
  CHECK(r.inner_swapped == doctest::Approx(r.inner).epsilon(1e-12));
  CHECK(r.caveats.size() >= 5);
  // The fixture is not automorphic, so agreement is neither expected nor reported.
  CHECK(r.automorphy_defect > 1e-3);
  CHECK(r.agrees == (r.relative_gap < r.loose_bound));
}

TEST_CASE("inner-product check at s = s'") {
  CplOptions opt;
  opt.nx = 3;
  opt.ny = 2;
  opt.y_top = 2;
  opt.H = 4;
  CplReport r = cpl_inner_product_check(fixture(), cx(1.5, 0.0, 96), cx(1.5, 0.0, 96), prof(), opt);
  MaassLValue half = maass_lstar(fixture(), cx(0.5, 0.0, 96), prof());
  MaassLValue first = maass_lstar(fixture(), cx(2.5, 0.0, 96), prof());
  CHECK(r.predicted == doctest::Approx((first.value * half.value).re().to_double()).epsilon(1e-12));
  CHECK(r.inner_swapped == doctest::Approx(r.inner).epsilon(1e-12));
}
