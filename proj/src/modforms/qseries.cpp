#include "eiskern/modforms/qseries.hpp"

#include <algorithm>

#include "eiskern/error.hpp"

namespace eiskern::modforms {

QSeries::QSeries(long order) {
  if (order < 0) throw OutOfDomain("q-series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw OutOfDomain("q-series needs at least one coefficient");
}

QSeries QSeries::truncated(long order) const {
  if (order > this->order()) throw InsufficientPrecision("cannot extend a truncated q-series");
  return QSeries(std::vector<BigRational>(c_.begin(), c_.begin() + order + 1));
}

QSeries QSeries::theta(unsigned r) const {
  QSeries out(*this);
  for (long n = 0; n <= order(); ++n) {
    BigInt f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(n), r);
    out.c_[n] *= BigRational(f);
  }
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& q) { return q.is_zero(); });
}

mp::Complex QSeries::evaluate(const mp::Complex& q) const {
  mp::Complex acc(q.prec());
  for (long n = order(); n >= 0; --n) {
    acc *= q;
    acc += mp::Real(c_[n], q.prec());
  }
  return acc;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(const BigRational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

namespace {

// Integer numerators over a common denominator.
void to_integers(const std::vector<BigRational>& c, std::size_t n, std::vector<BigInt>& out, BigInt& den) {
  den = 1;
  for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[i].den().get_mpz_t());
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = c[i].num() * (den / c[i].den());
}

}  // namespace

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::size_t n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
  std::vector<BigInt> ia, ib;
  BigInt da, db;
  to_integers(a.c_, n, ia, da);
  to_integers(b.c_, n, ib, db);
  std::vector<BigInt> prod(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  BigInt den = da * db;
  std::vector<BigRational> out;
  out.reserve(n);
  for (auto& v : prod) out.emplace_back(v, den);
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& base, unsigned e, long order) {
  std::vector<BigRational> one(static_cast<std::size_t>(order) + 1);
  one[0] = 1;
  QSeries result(std::move(one));
  QSeries b = base.truncated(order);
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace eiskern::modforms
