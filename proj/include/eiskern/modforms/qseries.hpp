#pragma once

#include <vector>

#include "eiskern/mpcore/bigrational.hpp"
#include "eiskern/mpcore/complex.hpp"

namespace eiskern::modforms {

using mp::BigInt;
using mp::BigRational;

// Truncated power series sum_{n <= order} a_n q^n with exact rational coefficients.
class QSeries {
 public:
  QSeries() : c_(1) {}
  explicit QSeries(long order);
  explicit QSeries(std::vector<BigRational> coeffs);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& operator[](long n) const { return c_.at(static_cast<std::size_t>(n)); }
  BigRational& operator[](long n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<BigRational>& coeffs() const { return c_; }

  QSeries truncated(long order) const;
  // theta^r with theta = q d/dq: a_n -> n^r a_n.
  QSeries theta(unsigned r = 1) const;
  bool is_zero() const;
  // Value at q (|q| < 1) at the precision of q.
  mp::Complex evaluate(const mp::Complex& q) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const BigRational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const BigRational& c) { return a *= c; }
  friend QSeries operator*(const BigRational& c, QSeries a) { return a *= c; }
  // Product truncated at the smaller order.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<BigRational> c_;
};

QSeries pow(const QSeries& base, unsigned e, long order);

}  // namespace eiskern::modforms
