#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"
#include "eiskern/mpcore/real.hpp"

// Even Maass cusp forms u(z) = sum_{n != 0} nu(n) 2 sqrt(y) K_{iR}(2 pi |n| y) e(nx), nu(1) = 1.
// Spectral data is read from files; nothing here solves for eigenvalues.
namespace eiskern::nonhol {

enum class Parity { Even, Odd };
std::string to_string(Parity p);

struct MaassFormData {
  mp::Real R;
  Parity parity = Parity::Even;
  std::vector<mp::Real> nu;  // nu[n-1] = nu(n), n = 1..N_max
  std::string source;
  double claimed_precision = 0;
};

// Format: optional '#' comment lines and blank lines; the first data line is
// `R <decimal> parity <even|odd> prec <decimal>`, then `n nu(n)` for n = 1, 2, ... with no gaps.
// Throws BadData on malformed input, duplicates, gaps, nu(1) != 1 or broken multiplicativity.
MaassFormData maass_parse(std::string_view text, const std::string& source);
MaassFormData maass_load(const std::string& path);

// nu(m) nu(n) = sum_{d | (m,n)} nu(mn/d^2) for all m, n >= 2 with mn <= N_max;
// returns the largest violation relative to 1 + sum |terms|.
double maass_hecke_defect(const MaassFormData& data);

struct MaassLValue {
  mp::Complex s;
  mp::Complex value;
  mp::Real err;          // quadrature, truncation and coefficient-precision terms
  mp::Real data_err;     // part of err due to claimed_precision
  long terms = 0;        // coefficients used
  double automorphy_defect = 0;  // |u(iy) - u(i/y)| / max at y = 5/4
  long bits = 0;         // working precision of the quadrature
};

// L*(u,s) = pi^{-s} Gamma((s+iR)/2) Gamma((s-iR)/2) L(u,s)
//         = int_1^infty u(iy) (y^{s-1/2} + y^{1/2-s}) dy/y   (u(i/y) = u(iy)).
// ParityUnsupported for odd data; InsufficientPrecision if N_max is too small.
MaassLValue maass_lstar(const MaassFormData& data, const mp::Complex& s, const PrecisionProfile& prof);

// u(z) from the truncated expansion, double precision output.
double maass_value(const MaassFormData& data, double x, double y, const PrecisionProfile& prof);

struct CplReport {
  mp::Complex s, sp;
  double inner = 0;  // <E*(.;s,s'), u> by fundamental-domain quadrature (real part; u is real)
  double inner_imag = 0;
  double inner_swapped = 0;  // same with s and s' exchanged
  double predicted = 0;      // L*(u,s+s'-1/2) L*(u,s'-s+1/2), real part
  double predicted_imag = 0;
  double quad_err = 0;       // node-halving difference of the quadrature
  double relative_gap = 0;   // |inner - predicted| / max(|predicted|, tiny)
  double automorphy_defect = 0;
  bool agrees = false;       // relative_gap below loose_bound
  double loose_bound = 0;
  std::vector<std::string> caveats;
};

struct CplOptions {
  int nx = 16;          // Gauss-Legendre nodes in x on [0, 1/2]
  int ny = 12;          // nodes per unit height in y
  double y_top = 6;     // fundamental domain cut
  double H = 8;         // coset height for the double series
  double loose_bound = 1e-2;
};

// The E(z, s+s') part of E* is orthogonal to cusp forms and is skipped.
CplReport cpl_inner_product_check(const MaassFormData& data, const mp::Complex& s, const mp::Complex& sp,
                                  const PrecisionProfile& prof, const CplOptions& opt = {});

}  // namespace eiskern::nonhol
