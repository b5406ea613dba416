#include "eiskern/mpcore/bigrational.hpp"

#include "eiskern/error.hpp"

namespace eiskern::mp {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw OutOfDomain("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s, 10));
    return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw BadData("not a rational literal: '" + s + "'");
  }
}

std::string BigRational::to_string() const { return q_.get_str(10); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw OutOfDomain("division by zero rational");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return BigRational(n, d);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace eiskern::mp
