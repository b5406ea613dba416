#pragma once

#include <complex>
#include <vector>

// Non-holomorphic kernel K(z;s,s') = (1/2) sum_{gamma in Gamma} Im(gamma z)^{s+s'} / |gamma z|^{2s}.
// All evaluators run in double precision.
namespace eiskern::nonhol {

using cd = std::complex<double>;

struct KernelValue {
  cd z, s, sp;
  cd value;
  double err = 0;         // |S(H) - S(H/2)| of the coset sum
  double rho = 0;         // radius of the disc B_rho holding s
  cd eis_part;            // pi^{1/2} Gamma(s-1/2)/Gamma(s) E(z, s'-s+1)
  cd sharp_part;          // 2 pi^s/Gamma(s) K#(z;s,s')
  long cosets = 0;
};

// Poisson-split evaluation: Eisenstein term plus the coset sum of
// K#(z;s,s') = sum_{Gamma_inf\Gamma} Im(gamma z)^{s'+1/2} xi#(gamma z, s).
// rho = |s|; requires Re(s) > 1/2 and Re(s') > rho + 5, else NonConvergence.
KernelValue kernel_K(cd z, cd s, cd sp, double H = 16);

// K#(z;s,s') alone, same domain and truncation.
KernelValue kernel_K_sharp(cd z, cd s, cd sp, double H = 16);

// The group sum itself, grouped by the matrix row that carries the exponent of smaller real part;
// the translations along that row are summed exactly. Needs min(Re s, Re s') > 1/2.
KernelValue kernel_K_direct(cd z, cd s, cd sp, double H = 40);

// Plain truncation of the group sum to max(|a|,|b|,|c|,|d|) <= H.
KernelValue kernel_K_bruteforce(cd z, cd s, cd sp, long H);

// Delta K = (s+s')(1-s-s') K + 4 s s' K(z;s+1,s'+1), Delta = -y^2 (d_xx + d_yy).
// The Laplacian is the 5-point stencil, Richardson-extrapolated from steps h and h/2.
struct LaplacianCheck {
  cd z, s, sp;
  double h = 0;
  cd laplacian, rhs;
  double residual = 0;  // |laplacian - rhs| / max(|K|, |rhs|)
};
LaplacianCheck laplacian_identity(cd z, cd s, cd sp, double h = 1e-2, double H = 16);

// K#(iy;s,s') along the imaginary axis and the log-slopes between consecutive samples.
struct SharpDecay {
  cd s, sp;
  double rho = 0;
  std::vector<double> y;
  std::vector<double> magnitude;
  std::vector<double> slope;  // d log|K#| / d log y between samples
  double bound_slope = 0;     // 5 + rho - Re(s')
};
SharpDecay sharp_decay(cd s, cd sp, const std::vector<double>& ys, double H = 16);

// T_n F(z) = n^{-1/2} sum_{ad = n, 0 <= b < d} F((az+b)/d).
template <class F>
cd hecke_apply(long n, cd z, F&& f) {
  cd acc = 0.0;
  for (long a = 1; a <= n; ++a) {
    if (n % a) continue;
    long d = n / a;
    for (long b = 0; b < d; ++b) acc += f((static_cast<double>(a) * z + static_cast<double>(b)) / static_cast<double>(d));
  }
  return acc / std::sqrt(static_cast<double>(n));
}

}  // namespace eiskern::nonhol
