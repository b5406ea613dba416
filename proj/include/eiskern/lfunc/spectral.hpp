#pragma once

#include <memory>
#include <vector>

#include "eiskern/modforms/eigenform.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

namespace eiskern::lfunc {

using Eigenbasis = std::vector<modforms::HeckeEigenform>;

// Coefficient count needed for the fundamental-domain quadrature of |f|^2.
long petersson_order(int k, const PrecisionProfile& prof);

// Order used when no caller asks for more: N_q, the quadrature need and the critical strip.
long default_order(int k, const PrecisionProfile& prof);

// Bits carried by cached eigenform coefficients at this profile.
mp::Bits eigen_bits(const PrecisionProfile& prof);

// Eigenbasis of S_k with at least max(min_order, default_order) coefficients.
// Cached per (k, P) and extended on demand; thread-safe.
std::shared_ptr<const Eigenbasis> eigenbasis(int k, const PrecisionProfile& prof, long min_order = 0);

// Eigenform number `index` with enough coefficients for L*(f, s; p/q) at denominators up to q.
std::shared_ptr<const modforms::HeckeEigenform> eigenform_for(int k, int index, const mp::Complex& s, long q,
                                                              const PrecisionProfile& prof);

}  // namespace eiskern::lfunc
