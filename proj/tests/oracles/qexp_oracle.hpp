#pragma once

#include <gmpxx.h>

#include <vector>

#include "oracles/bernoulli_recurrence.hpp"

namespace oracle {

using Series = std::vector<mpq_class>;

inline Series naive_mul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline mpz_class sigma(unsigned long r, unsigned long n) {
  mpz_class acc = 0;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, r);
    acc += t;
  }
  return acc;
}

inline Series eisenstein(unsigned long k, std::size_t order) {
  auto b = bernoulli_table(k);
  mpq_class c = mpq_class(-2 * static_cast<long>(k)) / b[k];
  Series s(order + 1);
  s[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) s[n] = c * mpq_class(sigma(k - 1, n));
  return s;
}

inline Series delta(std::size_t order) {
  Series e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  Series a = naive_mul(naive_mul(e4, e4), e4);
  Series b = naive_mul(e6, e6);
  Series d(order + 1);
  for (std::size_t i = 0; i <= order; ++i) d[i] = (a[i] - b[i]) / 1728;
  return d;
}

// Number of monomials E4^a E6^b of weight k; equals dim M_k.
inline long monomial_count(long k) {
  long c = 0;
  for (long a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0) ++c;
  return c;
}

}  // namespace oracle
