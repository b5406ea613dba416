#include "eiskern/dbleis/coset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eiskern/error.hpp"

namespace eiskern::dbleis {

namespace {

long mod_inverse(long d, long c) {
  long t = 0, nt = 1, r = c, nr = ((d % c) + c) % c;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % c) + c) % c;
}

}  // namespace

std::vector<Coset> enumerate_cosets(std::complex<double> z, double H) {
  double x = z.real(), y = z.imag();
  if (!(y > 0)) throw OutOfDomain("coset enumeration needs Im z > 0");
  if (!(H >= 1.0)) throw OutOfDomain("coset height must be at least 1");
  double r2 = H * H * y;
  std::vector<Coset> out;
  out.push_back({1, 0, 0, 1, 1.0, z, 1.0 / std::sqrt(y)});
  long cmax = static_cast<long>(std::floor(H / std::sqrt(y)));
  for (long c = 1; c <= cmax; ++c) {
    double rem = r2 - static_cast<double>(c) * c * y * y;
    if (rem < 0) continue;
    double half = std::sqrt(rem);
    long dlo = static_cast<long>(std::ceil(-c * x - half));
    long dhi = static_cast<long>(std::floor(-c * x + half));
    for (long d = dlo; d <= dhi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      long a = c == 1 ? 0 : mod_inverse(d, c);
      if (2 * a > c) a -= c;
      long b = (a * d - 1) / c;
      std::complex<double> j(c * x + d, c * y);
      std::complex<double> gz = static_cast<double>(a) / c - 1.0 / (static_cast<double>(c) * j);
      out.push_back({a, b, c, d, j, gz, std::abs(j) / std::sqrt(y)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Coset& u, const Coset& v) {
    if (u.radius != v.radius) return u.radius < v.radius;
    return u.c != v.c ? u.c < v.c : u.d < v.d;
  });
  return out;
}

}  // namespace eiskern::dbleis
