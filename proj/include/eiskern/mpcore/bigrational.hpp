#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace eiskern::mp {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "p/q", "-p/q".
  static BigRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }
  mpq_srcptr get_mpq_t() const { return q_.get_mpq_t(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned long e);
BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace eiskern::mp
