#include "vnskew/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace vnskew {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(const std::string& s) : value_(s) {
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.value_;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pochhammer(long a, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  mpz_class prod = 1;
  for (long i = 0; i < n; ++i) prod *= (a + i);
  return Rational(prod);
}

Rational binomial_int(long x, long k) {
  if (k < 0) throw std::invalid_argument("binomial_int: negative k");
  mpz_class num = 1;
  for (long i = 0; i < k; ++i) num *= (x - i);
  return Rational(num, factorial(k));
}

}  // namespace vnskew
