#include "eiskern/nonhol/maass.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "eiskern/error.hpp"
#include "eiskern/mpcore/quadrature.hpp"
#include "eiskern/mpcore/special.hpp"
#include "eiskern/nonhol/direct.hpp"

namespace eiskern::nonhol {

using mp::Bits;
using mp::Complex;
using mp::Real;

namespace {

constexpr Bits kDataBits = 256;
constexpr double kLn2 = 0.6931471805599453;

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

bool is_decimal(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool digit = false, dot = false, exp = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c == '.' && !dot && !exp) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digit && !exp) {
      exp = true;
      digit = false;
      if (i + 1 < t.size() && (t[i + 1] == '-' || t[i + 1] == '+')) ++i;
    } else {
      return false;
    }
  }
  return digit;
}

Real parse_real(const std::string& t, int line) {
  if (!is_decimal(t)) throw BadData("line " + std::to_string(line) + ": '" + t + "' is not a decimal number");
  return Real::parse(t, kDataBits);
}

// Working precision from the claimed data precision, capped by the profile.
Bits lstar_bits(const MaassFormData& data, const PrecisionProfile& prof) {
  double want = 48.0 - std::log2(std::max(data.claimed_precision, 1e-300));
  return static_cast<Bits>(std::max(64.0, std::min(static_cast<double>(prof.work()), std::ceil(want))));
}

// 4 sqrt(y) sum_{n <= N} nu(n) K_{iR}(2 pi n y) and the same with |nu(n)| replaced by 1.
struct AxisValue {
  Real u, kabs;
};

class Axis {
 public:
  Axis(const MaassFormData& data, Bits bits, const Real& ymin, const Real& ymax)
      : data_(data),
        bits_(bits),
        two_pi_(2L * mp::pi(bits)),
        cut_(bits * kLn2 + 12.0),
        K_(Complex(Real(bits), data.R.with_prec(bits)), two_pi_ * ymin,
           mp::max(two_pi_ * ymin, mp::min(two_pi_ * ymax * static_cast<long>(std::max<std::size_t>(1, data.nu.size())),
                                           Real(cut_ + 12.0, bits)))) {}

  AxisValue operator()(const Real& y, long& used) const {
    Real acc(bits_), kabs(bits_);
    double yd = y.to_double();
    long n_max = static_cast<long>(data_.nu.size());
    used = 0;
    for (long n = 1; n <= n_max; ++n) {
      if (2.0 * M_PI * n * yd > cut_ + 10.0) break;
      Real k = K_(two_pi_ * y * n).re();
      acc += data_.nu[static_cast<std::size_t>(n - 1)].with_prec(bits_) * k;
      kabs += mp::abs(k);
      used = n;
    }
    Real c = 4L * mp::sqrt(y);
    return {acc * c, kabs * c};
  }

  // Terms 2 pi n y > cut are below e^{-cut}; report whether the data reaches that far.
  bool complete_at(double y) const { return 2.0 * M_PI * (static_cast<double>(data_.nu.size()) + 1) * y > cut_; }
  double cut() const { return cut_; }

 private:
  const MaassFormData& data_;
  Bits bits_;
  Real two_pi_;
  double cut_;
  mp::BesselKTable K_;
};

double automorphy_defect(const MaassFormData& data, Bits bits) {
  Real a(1.25, bits), b(0.8, bits);
  Axis ax(data, bits, b, a);
  long used = 0;
  Real ua = ax(a, used).u, ub = ax(b, used).u;
  Real m = mp::max(mp::abs(ua), mp::abs(ub));
  if (m.is_zero()) return 0.0;
  return (mp::abs(ua - ub) / m).to_double();
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

MaassFormData maass_parse(std::string_view text, const std::string& source) {
  MaassFormData out;
  out.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!header) {
      if (tok.size() != 6 || tok[0] != "R" || tok[2] != "parity" || tok[4] != "prec")
        throw BadData("line " + std::to_string(lineno) + ": expected 'R <decimal> parity <even|odd> prec <decimal>'");
      out.R = parse_real(tok[1], lineno);
      if (out.R.sign() <= 0) throw BadData("spectral parameter R must be positive");
      if (tok[3] == "even") {
        out.parity = Parity::Even;
      } else if (tok[3] == "odd") {
        out.parity = Parity::Odd;
      } else {
        throw BadData("line " + std::to_string(lineno) + ": parity must be 'even' or 'odd'");
      }
      out.claimed_precision = parse_real(tok[5], lineno).to_double();
      if (!(out.claimed_precision > 0) || !(out.claimed_precision < 1))
        throw BadData("claimed precision must lie in (0, 1)");
      header = true;
      continue;
    }
    if (tok.size() != 2) throw BadData("line " + std::to_string(lineno) + ": expected 'n nu(n)'");
    const std::string& ns = tok[0];
    if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos || ns[0] == '0')
      throw BadData("line " + std::to_string(lineno) + ": index must be a positive integer");
    if (ns.size() > 9) throw BadData("line " + std::to_string(lineno) + ": index too large");
    long n = std::stol(ns);
    long expect = static_cast<long>(out.nu.size()) + 1;
    if (n < expect) throw BadData("line " + std::to_string(lineno) + ": duplicate coefficient index " + ns);
    if (n > expect) throw BadData("line " + std::to_string(lineno) + ": gap, expected index " + std::to_string(expect));
    out.nu.push_back(parse_real(tok[1], lineno));
  }
  if (!header) throw BadData("missing header line");
  if (out.nu.empty()) throw BadData("no coefficients");
  if (mp::abs(out.nu[0] - Real(1L, kDataBits)).to_double() > out.claimed_precision)
    throw BadData("nu(1) must equal 1");
  double defect = maass_hecke_defect(out);
  if (defect > 10.0 * out.claimed_precision)
    throw BadData("coefficients violate the Hecke relations: defect " + std::to_string(defect));
  return out;
}

MaassFormData maass_load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw BadData("cannot open Maass data file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return maass_parse(ss.str(), path);
}

double maass_hecke_defect(const MaassFormData& data) {
  long N = static_cast<long>(data.nu.size());
  auto nu = [&](long n) { return data.nu[static_cast<std::size_t>(n - 1)].to_double(); };
  double worst = 0.0;
  for (long m = 2; m * 2 <= N; ++m) {
    for (long n = m; m * n <= N; ++n) {
      double lhs = nu(m) * nu(n);
      double rhs = 0.0, mag = 1.0 + std::fabs(lhs);
      long g = std::gcd(m, n);
      for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        double t = nu(m * n / (d * d));
        rhs += t;
        mag += std::fabs(t);
      }
      worst = std::max(worst, std::fabs(lhs - rhs) / mag);
    }
  }
  return worst;
}

MaassLValue maass_lstar(const MaassFormData& data, const Complex& s_in, const PrecisionProfile& prof) {
  if (data.parity != Parity::Even) throw ParityUnsupported("L* is implemented for even Maass forms only");
  if (data.nu.empty()) throw BadData("no coefficients");
  Bits b = lstar_bits(data, prof);
  Complex s = s_in.with_prec(b);
  Complex half(Real(0.5, b));
  Complex e1 = s - half, e2 = half - s;
  Real one(1L, b);
  Axis ax(data, b, one, Real(1L, b) * 64L);
  double ymax = ax.cut() / (2.0 * M_PI) + 2.0;
  double sig = std::fabs(s.re().to_double() - 0.5);
  ymax += sig * std::log(ymax) / (2.0 * M_PI);
  // Geometric panels [y_k, y_k q]; each is resolved by a fixed Gauss-Legendre rule.
  const double q = 1.0625;
  const long nodes = 32;
  auto gl = mp::gauss_legendre(nodes, b);
  Complex value(b);
  Real data_err(b);
  long used_max = 0;
  Real y0 = one;
  Real ratio(q, b);
  while (y0.to_double() < ymax) {
    Real y1 = y0 * ratio;
    Real mid = (y0 + y1) / 2L, rad = (y1 - y0) / 2L;
    for (long i = 0; i < nodes; ++i) {
      Real y = mid + rad * gl->nodes[static_cast<std::size_t>(i)];
      long used = 0;
      AxisValue v = ax(y, used);
      used_max = std::max(used_max, used);
      Real w = rad * gl->weights[static_cast<std::size_t>(i)] / y;
      Complex ly(mp::log(y));
      Complex p1 = mp::exp(e1 * ly), p2 = mp::exp(e2 * ly);
      value += (p1 + p2) * (v.u * w);
      data_err += (mp::abs(p1) + mp::abs(p2)) * v.kabs * w;
    }
    y0 = y1;
  }
  MaassLValue out;
  out.s = s_in;
  out.value = value.with_prec(prof.P);
  out.data_err = (data_err * Real(data.claimed_precision, b)).with_prec(prof.P);
  // Omitted coefficients, with |nu(n)| <= 2 sqrt(n) as a working estimate.
  double trunc = 0.0;
  if (!ax.complete_at(1.0)) {
    double n1 = static_cast<double>(data.nu.size()) + 1.0;
    trunc = 16.0 * std::sqrt(n1) * std::exp(-2.0 * M_PI * n1) * std::pow(ymax, sig);
  }
  Real quad = mp::exp2i(-b + 8, b) * (mp::abs(value) + 1L);
  out.err = (out.data_err + Real(trunc, b) + quad + Real(std::exp(-ax.cut()), b)).with_prec(prof.P);
  out.terms = used_max;
  out.bits = b;
  out.automorphy_defect = automorphy_defect(data, b);
  return out;
}

namespace {

// u(x + iy) for y >= ymin, sharing one Bessel table.
class FormEvaluator {
 public:
  FormEvaluator(const MaassFormData& data, const PrecisionProfile& prof, double ymin)
      : data_(data),
        b_(lstar_bits(data, prof)),
        two_pi_(2L * mp::pi(b_)),
        cut_(b_ * kLn2 + 12.0),
        K_(Complex(Real(b_), data.R.with_prec(b_)), two_pi_ * Real(ymin, b_),
           mp::max(two_pi_ * Real(ymin, b_), Real(cut_ + 12.0, b_))) {}

  double operator()(double x, double y) const {
    Real yr(y, b_), xr(x, b_);
    Real acc(b_);
    for (long n = 1; n <= static_cast<long>(data_.nu.size()); ++n) {
      if (2.0 * M_PI * n * y > cut_ + 10.0) break;
      Real k = K_(two_pi_ * yr * n).re();
      Real c = data_.parity == Parity::Even ? mp::cos(two_pi_ * xr * n) : mp::sin(two_pi_ * xr * n);
      acc += data_.nu[static_cast<std::size_t>(n - 1)].with_prec(b_) * k * c;
    }
    return (acc * 4L * mp::sqrt(yr)).to_double();
  }

 private:
  const MaassFormData& data_;
  Bits b_;
  Real two_pi_;
  double cut_;
  mp::BesselKTable K_;
};

}  // namespace

double maass_value(const MaassFormData& data, double x, double y, const PrecisionProfile& prof) {
  if (!(y > 0)) throw OutOfDomain("Maass form needs y > 0");
  return FormEvaluator(data, prof, y)(x, y);
}

CplReport cpl_inner_product_check(const MaassFormData& data, const Complex& s, const Complex& sp,
                                  const PrecisionProfile& prof, const CplOptions& opt) {
  int nx = opt.nx, ny = opt.ny;
  double y_top = opt.y_top, loose_bound = opt.loose_bound;
  if (data.parity != Parity::Even) throw ParityUnsupported("the inner-product identity is stated for even forms");
  if (nx < 2 || ny < 2) throw OutOfDomain("quadrature needs at least two nodes per direction");
  using cd = std::complex<double>;
  cd sd(s.re().to_double(), s.im().to_double()), spd(sp.re().to_double(), sp.im().to_double());
  if (!(sd.real() > 1.0) || !(spd.real() > 1.0)) throw OutOfDomain("the check needs Re(s), Re(s') > 1");
  CplReport out;
  out.s = s;
  out.sp = sp;
  out.loose_bound = loose_bound;
  Bits b = 96;
  Complex sm = s.with_prec(b), spm = sp.with_prec(b);
  auto to_cd = [](const Complex& z) { return cd(z.re().to_double(), z.im().to_double()); };
  cd pref = to_cd(4L * mp::cpow(mp::pi(b), -(sm + spm)) * mp::gamma(sm) * mp::gamma(spm) *
                  mp::zeta(3L * sm + spm) * mp::zeta(sm + 3L * spm));
  cd w = sd + spd;
  bool equal_re = std::fabs(sd.real() - spd.real()) < 1e-12;
  auto E = [&](cd z, cd a, cd c) {
    return equal_re ? nonhol_dbl_eis_direct(z, w, a, c, 2.0 * opt.H).value : nonhol_dbl_eis_rearranged(z, w, a, c, opt.H).value;
  };
  // Fundamental domain |x| <= 1/2, y >= sqrt(1 - x^2), cut at y = y_top; x >= 0 by evenness of both factors.
  FormEvaluator form(data, prof, std::sqrt(3.0) / 2.0);
  auto integrate = [&](int mx, int my, bool swapped) {
    auto glx = mp::gauss_legendre(mx, 64), gly = mp::gauss_legendre(my, 64);
    cd acc = 0.0;
    for (int i = 0; i < mx; ++i) {
      double x = 0.25 + 0.25 * glx->nodes[static_cast<std::size_t>(i)].to_double();
      double wx = 0.25 * glx->weights[static_cast<std::size_t>(i)].to_double();
      double ylo = std::sqrt(1.0 - x * x);
      std::vector<std::pair<double, double>> panels{{ylo, 1.0}};
      for (double a = 1.0; a < y_top; a += 1.0) panels.push_back({a, std::min(a + 1.0, y_top)});
      for (auto [a, c] : panels) {
        for (int j = 0; j < my; ++j) {
          double y = 0.5 * (a + c) + 0.5 * (c - a) * gly->nodes[static_cast<std::size_t>(j)].to_double();
          double wy = 0.5 * (c - a) * gly->weights[static_cast<std::size_t>(j)].to_double();
          double u = form(x, y);
          if (u == 0.0) continue;
          cd z(x, y);
          cd f = swapped ? E(z, spd, sd) : E(z, sd, spd);
          acc += 2.0 * wx * wy * f * u / (y * y);
        }
      }
    }
    return pref * acc;
  };
  cd inner = integrate(nx, ny, false);
  cd coarse = integrate(std::max(2, nx / 2), std::max(2, ny / 2), false);
  cd swapped = integrate(nx, ny, true);
  out.inner = inner.real();
  out.inner_imag = inner.imag();
  out.inner_swapped = swapped.real();
  out.quad_err = std::abs(inner - coarse);
  MaassLValue l1 = maass_lstar(data, sm + spm - Complex(Real(0.5, b)), prof);
  MaassLValue l2 = maass_lstar(data, spm - sm + Complex(Real(0.5, b)), prof);
  cd pred = to_cd(l1.value) * to_cd(l2.value);
  out.predicted = pred.real();
  out.predicted_imag = pred.imag();
  out.relative_gap = std::abs(inner - pred) / std::max(std::abs(pred), 1e-300);
  out.automorphy_defect = l1.automorphy_defect;
  out.agrees = out.relative_gap < loose_bound;
  out.caveats.push_back("E(z, s+s') term omitted: orthogonal to cusp forms");
  out.caveats.push_back("fundamental domain cut at y = " + fmt(y_top) + "; u decays like e^{-2 pi y}");
  out.caveats.push_back("double series truncated at coset height " + fmt(opt.H) +
                        (equal_re ? " (pair sum, doubled height)" : " (rearranged route)"));
  out.caveats.push_back("continuous-spectrum contribution is not computed");
  if (out.automorphy_defect > 1e-6)
    out.caveats.push_back("data is not automorphic (|u(1.25i) - u(0.8i)| relative " +
                          fmt(out.automorphy_defect) + "); the identity is not expected to hold");
  return out;
}

}  // namespace eiskern::nonhol
