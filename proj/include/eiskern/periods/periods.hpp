#pragma once

#include <string>
#include <vector>

#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/precision.hpp"

namespace eiskern::periods {

using mp::BigRational;
using mp::Complex;
using mp::Real;

enum class Verdict { Rational, Inconclusive };
std::string to_string(Verdict v);

inline constexpr long kDefaultDMax = 100000000;

struct RationalCertificate {
  Complex input;
  BigRational reconstructed;  // best convergent found, also when inconclusive
  long D_max = kDefaultDMax;
  Real tol;
  Real residual;  // |input - reconstructed|
  Verdict verdict = Verdict::Inconclusive;
  std::vector<BigRational> convergents;
};

// Continued-fraction reconstruction: the first convergent with denominator <= D_max
// lying within tol of x. Non-real x (|Im x| > tol) is inconclusive.
RationalCertificate rational_reconstruct(const Complex& x, long D_max, const Real& tol);
// tol = 2^{-prec(x)/2}
RationalCertificate rational_reconstruct(const Complex& x, long D_max = kDefaultDMax);

// Membership in K_f = Q(theta), theta = a_f(2): x = sum_j c_j theta^j with rational c_j,
// solved from the values at every embedding.
struct FieldCertificate {
  std::string field;  // "Q" or "Q(a(2))"
  std::vector<RationalCertificate> coords;  // c_0, c_1, ...
  Verdict verdict = Verdict::Inconclusive;
  Real residual;  // largest |x_i - sum_j c_j theta_i^j| over embeddings
};

FieldCertificate field_reconstruct(const std::vector<Complex>& values, const std::vector<Complex>& theta, long D_max,
                                   const Real& tol);
bool same_reconstruction(const FieldCertificate& a, const FieldCertificate& b);

struct PeriodPair {
  std::string form;
  Real omega_plus, omega_minus;
  Real c_f;  // L*(f,k-1) L*(f,k-2) / <f,f>
  Real norm;  // <f,f>
  Real err_est;
  Real product_residual;  // |omega_plus omega_minus - <f,f>|
};

PeriodPair period_pair(int k, int index, const PrecisionProfile& prof);

struct ManinEntry {
  bool plus = true;  // L*(f,s)/omega_plus for even s, L*(f,s)/omega_minus for odd s
  int s = 0;
  Real ratio;
  FieldCertificate cert;
};

struct ManinTable {
  int k = 0;
  int index = 0;
  PeriodPair periods;
  std::vector<ManinEntry> entries;  // s = 1..k-1
  bool all_certified = false;
};

ManinTable manin_table(int k, int index, const PrecisionProfile& prof, long D_max = kDefaultDMax);
bool same_reconstruction(const ManinTable& a, const ManinTable& b);

// L*(f,s)/omega_+ against the f-coordinate x_+ of E*_{s,k-s}(., k-1), and L*(f,s)/omega_-
// against the f-coordinate x_- of E*_{k-2,2}(., s). Both ratios lie in K_f.
struct KdkdReport {
  std::string form;
  Complex s;
  Complex lvalue;
  Complex over_plus, over_minus;  // L*(f,s)/omega_+, L*(f,s)/omega_-
  Complex coord_plus, coord_minus;
  Complex ratio_plus, ratio_minus;  // over / coord
  Real identity_residual;  // |ratio_plus - 1/c_f| + |ratio_minus - 1|
  FieldCertificate cert_plus, cert_minus;
  bool decidable = true;  // false for non-real s
  std::string note;
};

KdkdReport kdkd_check(int k, int index, const Complex& s, const PrecisionProfile& prof, long D_max = kDefaultDMax);

// i^u q^{k-2} L*(f,u;p/q) = alpha omega_+ + i beta omega_- with alpha, beta in K_f.
struct TwistedPeriodReport {
  std::string form;
  int u = 0;
  BigRational twist;
  Complex value;  // L*(f,u;p/q)
  Real alpha, beta;
  FieldCertificate cert_alpha, cert_beta;
  Real residual;  // |i^u q^{k-2} L* - (alpha' omega_+ + i beta' omega_-)| with reconstructed alpha', beta'
};

TwistedPeriodReport twisted_period_check(int k, int index, int u, const BigRational& twist,
                                         const PrecisionProfile& prof, long D_max = kDefaultDMax);

}  // namespace eiskern::periods
