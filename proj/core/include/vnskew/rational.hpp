#ifndef VNSKEW_RATIONAL_HPP
#define VNSKEW_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace vnskew {

/// Exact rational number. Always stored canonically: gcd(|num|, den) = 1,
/// den > 0. Arithmetic never rounds.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpz_class& n) : value_(n) {}
  explicit Rational(const std::string& s);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

/// n! as an exact integer; n must be non-negative.
mpz_class factorial(long n);

/// Rising factorial a(a+1)...(a+n-1); empty product = 1.
Rational pochhammer(long a, long n);

/// Generalized binomial coefficient C(x, k) for integer x (possibly
/// negative) and k >= 0, via the falling factorial x(x-1)...(x-k+1)/k!.
Rational binomial_int(long x, long k);

}  // namespace vnskew

#endif  // VNSKEW_RATIONAL_HPP
