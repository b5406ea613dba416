#pragma once

#include <vector>

#include "eiskern/modforms/qseries.hpp"

namespace eiskern::modforms {

// Level-one modular form given by its truncated q-expansion.
class ModularForm {
 public:
  ModularForm(int weight, QSeries series);

  int weight() const { return weight_; }
  const QSeries& series() const { return series_; }
  bool cuspidal() const { return cuspidal_; }
  long order() const { return series_.order(); }
  const BigRational& operator[](long n) const { return series_[n]; }

  friend bool operator==(const ModularForm& a, const ModularForm& b) {
    return a.weight_ == b.weight_ && a.series_ == b.series_;
  }

 private:
  int weight_;
  QSeries series_;
  bool cuspidal_;
};

long dim_modular(int k);
long dim_cusp(int k);

ModularForm eisenstein_qexp(int k, long order);
ModularForm delta_qexp(long order);
// Echelon basis g_0..g_d of M_k with g_i = q^i + O(q^{d+1}).
std::vector<ModularForm> victor_miller_basis(int k, long order);
// The cuspidal part g_1..g_d of the Victor-Miller basis.
std::vector<ModularForm> cusp_basis(int k, long order);

ModularForm operator*(const ModularForm& a, const ModularForm& b);
ModularForm operator+(const ModularForm& a, const ModularForm& b);
ModularForm operator-(const ModularForm& a, const ModularForm& b);
ModularForm operator*(const BigRational& c, const ModularForm& f);

// T_m f truncated at `target_order` (default floor(order/m)).
ModularForm hecke_operator(long m, const ModularForm& f, long target_order = -1);

// Rankin-Cohen bracket with theta = q d/dq, i.e. [g1, g2]_n / (2 pi i)^n.
ModularForm rankin_cohen(const ModularForm& g1, const ModularForm& g2, unsigned n);

// g - a_0(g) E_k.
ModularForm cuspidal_projection_exact(const ModularForm& g);

// Exact coordinates of a cusp form of weight k in cusp_basis(k, .).
std::vector<BigRational> cusp_coordinates(const ModularForm& h);

}  // namespace eiskern::modforms
