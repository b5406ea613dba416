#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiskern/modforms/modular_form.hpp"
#include "eiskern/mpcore/complex.hpp"
#include "eiskern/mpcore/linalg.hpp"

namespace eiskern::modforms {

// Normalized Hecke eigenform of level one. Coefficients are stored
// numerically for every embedding; the exact series is kept when dim S_k = 1.
struct HeckeEigenform {
  int weight = 0;
  long dim_Sk = 0;
  std::optional<QSeries> exact_series;
  std::vector<mp::Complex> numeric_coeffs;  // index n = 0..order
  int embedding_index = 0;

  long order() const { return static_cast<long>(numeric_coeffs.size()) - 1; }
  mp::Bits prec() const { return numeric_coeffs.at(1).prec(); }
  const mp::Complex& a(long n) const;
  // Coefficients as reals (imaginary parts vanish by construction).
  mp::Real a_real(long n) const { return a(n).re(); }
  std::string label() const;
};

// Characteristic polynomial of T_p on S_k, exact, ascending coefficients.
mp::QPoly hecke_charpoly(int k, long p = 2);

// All normalized eigenforms of weight k (4 <= k <= 40), ordered by a(2).
std::vector<HeckeEigenform> eigenforms(int k, long order, mp::Bits prec);

// Coordinates of a cusp form of weight k in the eigenbasis.
std::vector<mp::Complex> eigen_coordinates(const ModularForm& h, const std::vector<HeckeEigenform>& basis);

}  // namespace eiskern::modforms
