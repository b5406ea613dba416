#include "eiskern/lfunc/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "eiskern/error.hpp"
#include "eiskern/lfunc/lvalue.hpp"

namespace eiskern::lfunc {

long petersson_order(int k, const PrecisionProfile& prof) {
  double target = -(static_cast<double>(prof.work()) + 8.0) * std::log(2.0);
  double decay = 2.0 * M_PI * std::sqrt(3.0) / 2.0;
  long last_bad = 1;
  for (long n = 1; n < 100000; ++n) {
    double ln = std::log(static_cast<double>(n));
    double b = std::log(2.0) + 0.5 * ln + 0.5 * (k - 1) * ln - decay * n;
    if (b >= target) last_bad = n;
    else if (n > 2 * last_bad + 8) break;
  }
  return last_bad + 1;
}

long default_order(int k, const PrecisionProfile& prof) {
  long n = std::max(prof.N_q, petersson_order(k, prof));
  mp::Bits p = prof.work();
  n = std::max(n, coefficients_needed(k, mp::Complex(1L, p), 1, prof));
  n = std::max(n, coefficients_needed(k, mp::Complex(static_cast<long>(k / 2), p), 1, prof));
  return n;
}

mp::Bits eigen_bits(const PrecisionProfile& prof) { return prof.work() + 64; }

namespace {

std::mutex cache_mu;
std::map<std::pair<int, mp::Bits>, std::shared_ptr<const Eigenbasis>> cache;

std::shared_ptr<const Eigenbasis> basis_at(int k, mp::Bits prec, long order) {
  std::pair<int, mp::Bits> key{k, prec};
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = cache.find(key);
  if (it != cache.end() && (it->second->empty() || it->second->front().order() >= order)) return it->second;
  // Grow geometrically so repeated small extensions stay cheap.
  long target = order;
  if (it != cache.end() && !it->second->empty()) target = std::max(order, it->second->front().order() * 3 / 2);
  auto b = std::make_shared<const Eigenbasis>(modforms::eigenforms(k, target, prec));
  cache[key] = b;
  return b;
}

}  // namespace

std::shared_ptr<const Eigenbasis> eigenbasis(int k, const PrecisionProfile& prof, long min_order) {
  return basis_at(k, eigen_bits(prof), std::max(min_order, default_order(k, prof)));
}

std::shared_ptr<const modforms::HeckeEigenform> eigenform_for(int k, int index, const mp::Complex& s, long q,
                                                              const PrecisionProfile& prof) {
  long need = std::max(default_order(k, prof), coefficients_needed(k, s, q, prof));
  double t = std::fabs(s.im().to_double());
  mp::Bits prec = eigen_bits(prof);
  if (t > 0) {
    mp::Bits extra = static_cast<mp::Bits>(t * M_PI / 2.0 / std::log(2.0)) + 16;
    if (extra > 64) prec = prof.work() + extra;
  }
  auto b = basis_at(k, prec, need);
  if (index < 0 || static_cast<std::size_t>(index) >= b->size())
    throw OutOfDomain("weight " + std::to_string(k) + " has no eigenform #" + std::to_string(index));
  return std::shared_ptr<const modforms::HeckeEigenform>(b, &(*b)[static_cast<std::size_t>(index)]);
}

}  // namespace eiskern::lfunc
