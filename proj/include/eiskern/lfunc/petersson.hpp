#pragma once

#include <string>

#include "eiskern/lfunc/lvalue.hpp"
#include "eiskern/lfunc/spectral.hpp"

namespace eiskern::lfunc {

enum class NormMethod { StripQuadrature, RankIdentity };

std::string to_string(NormMethod m);

// <f, f> = int_F y^k |f|^2 dx dy / y^2, no volume normalization.
struct PeterssonNorm {
  std::string form;
  Real value;
  NormMethod method = NormMethod::StripQuadrature;
  Real err_est;
};

// Strip y >= 1 termwise, plus 2-D Gauss-Legendre over the rest of F.
// The node count doubles until two successive rules agree; QuadratureFailure past the cap.
PeterssonNorm petersson_norm(const HeckeEigenform& f, const PrecisionProfile& prof);

struct InnerProduct {
  Real value;
  Real err_est;
};

// <g, f> for a cusp form g with exact rational coefficients, same quadrature as the norm.
InnerProduct petersson_inner(const modforms::ModularForm& g, const HeckeEigenform& f, const PrecisionProfile& prof);

// From <E_4 E_{k-4} cusp part, f> = c_f <f, f> and the kernel formula with n = 0.
PeterssonNorm petersson_norm_rank_identity(const HeckeEigenform& f, const PrecisionProfile& prof);

// Quadrature norm of eigenform `index` of weight k, cached per (k, index, P).
PeterssonNorm petersson_norm_cached(int k, int index, const PrecisionProfile& prof);

struct ConvolutionCheck {
  Real lhs;       // zeta(k+1-s-w) Gamma(k-s) (2 pi)^{s-k} sum_{m<=M} a(m) sigma_{w-s}(m) m^{s-k}
  Real rhs;       // (2 pi)^{k-w} / Gamma(k-w) L*(f, k-s) L*(f, k-w)
  Real residual;  // |lhs - rhs|
  Real bound;     // rigorous bound on the truncated tail plus the L-value errors
  long terms = 0;
};

// Real s, w with Re(k-s) > (k+1)/2 + max(0, w - s). M <= 0 selects max(M_tail, N_q).
ConvolutionCheck rankin_convolution_check(const HeckeEigenform& f, const Real& s, const Real& w,
                                          const PrecisionProfile& prof, long M = 0);

}  // namespace eiskern::lfunc
