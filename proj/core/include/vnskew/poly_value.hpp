#ifndef VNSKEW_POLY_VALUE_HPP
#define VNSKEW_POLY_VALUE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "vnskew/rational.hpp"

namespace vnskew {

/// Monomial g^a * z2^b * z3^c in the formal symbols g (Euler's constant),
/// z2 (zeta(2)) and z3 (zeta(3)). Total weight counts g once, z2 twice and
/// z3 three times, matching the transcendence weight of the constants.
struct Monomial {
  std::uint32_t g = 0;
  std::uint32_t z2 = 0;
  std::uint32_t z3 = 0;

  std::uint32_t weight() const { return g + 2 * z2 + 3 * z3; }
  bool is_constant() const { return g == 0 && z2 == 0 && z3 == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Ordered by (total weight, lexicographic in g, z2, z3); the canonical
  // print order walks this descending.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.g <=> b.g; c != 0) return c;
    if (auto c = a.z2 <=> b.z2; c != 0) return c;
    return a.z3 <=> b.z3;
  }
};

/// Exact polynomial over {g, z2, z3} with Rational coefficients. The three
/// symbols are treated as algebraically independent, so equality of values
/// is coefficient-wise equality of the canonicalized term maps. Zero
/// coefficients are never stored.
class PolyValue {
 public:
  PolyValue() = default;
  PolyValue(const Rational& c);  // NOLINT: implicit by design
  PolyValue(long c) : PolyValue(Rational(c)) {}  // NOLINT

  static PolyValue symbol_g();
  static PolyValue symbol_z2();
  static PolyValue symbol_z3();
  static PolyValue monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Constant (monomial-free) part; zero if absent.
  Rational constant_part() const;
  Rational coefficient(const Monomial& m) const;
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t max_weight() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  PolyValue& operator+=(const PolyValue& o);
  PolyValue& operator-=(const PolyValue& o);
  PolyValue& operator*=(const PolyValue& o);
  PolyValue& operator*=(const Rational& c);
  PolyValue& operator/=(const Rational& c);

  friend PolyValue operator+(PolyValue a, const PolyValue& b) { a += b; return a; }
  friend PolyValue operator-(PolyValue a, const PolyValue& b) { a -= b; return a; }
  friend PolyValue operator*(PolyValue a, const PolyValue& b) { a *= b; return a; }
  friend PolyValue operator*(PolyValue a, const Rational& c) { a *= c; return a; }
  friend PolyValue operator*(const Rational& c, PolyValue a) { a *= c; return a; }
  friend PolyValue operator/(PolyValue a, const Rational& c) { a /= c; return a; }
  friend PolyValue operator-(const PolyValue& a);

  friend bool operator==(const PolyValue& a, const PolyValue& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyValue& a, const PolyValue& b) { return !(a == b); }

  PolyValue pow(unsigned e) const;

  /// Substitutes double-precision values of the constants.
  double to_double() const;

  /// Canonical string, monomials in descending (weight, lex) order,
  /// e.g. "-3*g + 65/12".
  std::string str() const;

 private:
  void insert(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyValue& v);

/// Numeric values used by PolyValue::to_double.
inline constexpr double kEulerGamma = 0.5772156649015328606;
inline constexpr double kZeta2 = 1.6449340668482264365;  // pi^2 / 6
inline constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace vnskew

#endif  // VNSKEW_POLY_VALUE_HPP
