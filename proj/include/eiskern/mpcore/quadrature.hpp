#pragma once

#include <memory>
#include <vector>

#include "eiskern/mpcore/real.hpp"

namespace eiskern::mp {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Cached per (n, prec); safe to call concurrently.
std::shared_ptr<const GaussLegendre> gauss_legendre(long n, Bits prec);

}  // namespace eiskern::mp
