#include "eiskern/nonhol/kernel.hpp"

#include <cmath>
#include <numeric>

#include "eiskern/dbleis/coset.hpp"
#include "eiskern/error.hpp"
#include "eiskern/nonhol/fast.hpp"

namespace eiskern::nonhol {

namespace {

cd cpow(double b, cd s) { return std::exp(s * std::log(b)); }

void check_split_domain(cd s, cd sp, double& rho) {
  rho = std::abs(s);
  if (!(s.real() > 0.5)) throw NonConvergence("K# needs Re(s) > 1/2");
  if (!(sp.real() > rho + 5.0)) throw NonConvergence("K# needs Re(s') > |s| + 5");
}

// Sum over cosets up to height H and up to H/2.
template <class Term>
std::pair<cd, cd> truncated(cd z, double H, Term&& term, long& count) {
  auto cosets = dbleis::enumerate_cosets(z, H);
  cd full = 0.0, half = 0.0;
  for (const auto& c : cosets) {
    cd t = term(c.gz);
    full += t;
    if (c.radius <= H / 2.0) half += t;
  }
  count = static_cast<long>(cosets.size());
  return {full, half};
}

}  // namespace

KernelValue kernel_K_sharp(cd z, cd s, cd sp, double H) {
  KernelValue out;
  out.z = z;
  out.s = s;
  out.sp = sp;
  check_split_domain(s, sp, out.rho);
  cd w = fast::reduce(z);
  fast::XiSharp xs(s);
  cd e = sp + 0.5;
  auto [full, half] = truncated(w, H, [&](cd g) { return cpow(g.imag(), e) * xs(g); }, out.cosets);
  out.value = full;
  out.sharp_part = full;
  out.err = std::abs(full - half) + 1e-15 * std::abs(full);
  return out;
}

KernelValue kernel_K(cd z, cd s, cd sp, double H) {
  KernelValue sharp = kernel_K_sharp(z, s, sp, H);
  fast::XiSharp xs(s);
  fast::Eisenstein E(sp - s + 1.0);
  KernelValue out = sharp;
  out.eis_part = xs.zero_mode() * E(z);
  out.sharp_part = xs.poisson() * sharp.value;
  out.value = out.eis_part + out.sharp_part;
  out.err = std::abs(xs.poisson()) * sharp.err + 1e-14 * std::abs(out.eis_part);
  return out;
}

KernelValue kernel_K_direct(cd z, cd s, cd sp, double H) {
  KernelValue out;
  out.z = z;
  out.s = s;
  out.sp = sp;
  // Exchanging the rows of gamma (gamma -> S gamma) exchanges the roles of s and s'.
  cd inner = s.real() <= sp.real() ? s : sp;
  if (!(inner.real() > 0.5)) throw NonConvergence("the group sum needs Re(s), Re(s') > 1/2");
  cd w = fast::reduce(z);
  fast::XiDirect xi(inner);
  cd e = s + sp;
  auto [full, half] = truncated(w, H, [&](cd g) { return cpow(g.imag(), e) * xi(g); }, out.cosets);
  out.value = full;
  out.err = std::abs(full - half) + 1e-15 * std::abs(full);
  out.rho = std::abs(s);
  return out;
}

KernelValue kernel_K_bruteforce(cd z, cd s, cd sp, long H) {
  if (!(z.imag() > 0)) throw OutOfDomain("K needs Im z > 0");
  if (!(s.real() > 0.5) || !(sp.real() > 0.5)) throw NonConvergence("the group sum needs Re(s), Re(s') > 1/2");
  if (H < 2) throw OutOfDomain("brute-force height must be at least 2");
  KernelValue out;
  out.z = z;
  out.s = s;
  out.sp = sp;
  double y = z.imag();
  auto sum_at = [&](long h) {
    cd acc = 0.0;
    long count = 0;
    for (long c = -h; c <= h; ++c) {
      for (long d = -h; d <= h; ++d) {
        if (std::gcd(c, d) != 1) continue;
        // a0 d - b0 c = 1
        long a0 = 0, b0 = 0;
        {
          long r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
          while (r1 != 0) {
            long q = r0 / r1;
            long r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
          }
          // s0 d + t0 c = r0 = +-1
          a0 = s0 * r0;
          b0 = -t0 * r0;
        }
        cd j = static_cast<double>(c) * z + static_cast<double>(d);
        cd row2 = std::exp(-sp * std::log(std::norm(j)));
        // (a0 + n c, b0 + n d) over all n with both entries in [-h, h]
        long nlo = -4 * h - 4, nhi = 4 * h + 4;
        auto clamp = [&](long base, long step) {
          if (step == 0) {
            if (std::labs(base) > h) { nlo = 1; nhi = 0; }
            return;
          }
          double lo = (-h - base) / static_cast<double>(step), hi = (h - base) / static_cast<double>(step);
          if (lo > hi) std::swap(lo, hi);
          nlo = std::max(nlo, static_cast<long>(std::ceil(lo - 1e-12)));
          nhi = std::min(nhi, static_cast<long>(std::floor(hi + 1e-12)));
        };
        clamp(a0, c);
        clamp(b0, d);
        for (long n = nlo; n <= nhi; ++n) {
          cd top = static_cast<double>(a0 + n * c) * z + static_cast<double>(b0 + n * d);
          acc += std::exp(-s * std::log(std::norm(top))) * row2;
          ++count;
        }
      }
    }
    out.cosets = count;
    return 0.5 * cpow(y, s + sp) * acc;
  };
  cd half = sum_at(H / 2);
  out.value = sum_at(H);
  out.err = std::abs(out.value - half);
  out.rho = std::abs(s);
  return out;
}

LaplacianCheck laplacian_identity(cd z, cd s, cd sp, double h, double H) {
  LaplacianCheck out;
  out.z = z;
  out.s = s;
  out.sp = sp;
  out.h = h;
  auto K = [&](cd w) { return kernel_K(w, s, sp, H).value; };
  cd k0 = K(z);
  double y = z.imag();
  auto stencil = [&](double t) {
    cd sum = K(z + t) + K(z - t) + K(z + cd(0, t)) + K(z - cd(0, t)) - 4.0 * k0;
    return -y * y * sum / (t * t);
  };
  cd l1 = stencil(h), l2 = stencil(h / 2.0);
  out.laplacian = (4.0 * l2 - l1) / 3.0;
  cd k1 = kernel_K(z, s + 1.0, sp + 1.0, H).value;
  out.rhs = (s + sp) * (1.0 - s - sp) * k0 + 4.0 * s * sp * k1;
  out.residual = std::abs(out.laplacian - out.rhs) / std::max(std::abs(k0), std::abs(out.rhs));
  return out;
}

SharpDecay sharp_decay(cd s, cd sp, const std::vector<double>& ys, double H) {
  SharpDecay out;
  out.s = s;
  out.sp = sp;
  for (double y : ys) {
    KernelValue v = kernel_K_sharp(cd(0, y), s, sp, H);
    out.rho = v.rho;
    out.y.push_back(y);
    out.magnitude.push_back(std::abs(v.value));
  }
  for (std::size_t i = 1; i < out.y.size(); ++i)
    out.slope.push_back(std::log(out.magnitude[i] / out.magnitude[i - 1]) / std::log(out.y[i] / out.y[i - 1]));
  out.bound_slope = 5.0 + out.rho - sp.real();
  return out;
}

}  // namespace eiskern::nonhol
