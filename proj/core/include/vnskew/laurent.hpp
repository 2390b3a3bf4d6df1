#ifndef VNSKEW_LAURENT_HPP
#define VNSKEW_LAURENT_HPP

#include <limits>
#include <map>

#include "vnskew/poly_value.hpp"

namespace vnskew {

/// Truncated Laurent series in a formal epsilon with PolyValue coefficients.
/// Powers below -3 never occur (third-order log-derivatives produce at worst
/// triple poles). Each series carries the highest power up to which its
/// coefficients are exact; arithmetic propagates that bound, so a consumer
/// can tell whether the eps^0 coefficient of a long product is trustworthy.
class LaurentSeries {
 public:
  static constexpr int kMinPower = -3;
  static constexpr int kExactEverywhere = std::numeric_limits<int>::max() / 2;

  explicit LaurentSeries(int truncation_order = kExactEverywhere)
      : truncation_(truncation_order) {}

  static LaurentSeries constant(const PolyValue& v, int truncation_order);

  int truncation_order() const { return truncation_; }
  /// Lowest power carrying a nonzero coefficient; kExactEverywhere if the
  /// series is identically zero up to its truncation.
  int order() const;
  bool is_zero() const { return coeffs_.empty(); }

  PolyValue coefficient(int power) const;
  void set_coefficient(int power, const PolyValue& v);

  const std::map<int, PolyValue>& coefficients() const { return coeffs_; }

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { a += b; return a; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { a -= b; return a; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  LaurentSeries& operator*=(const PolyValue& c);
  LaurentSeries& operator*=(const Rational& c);
  friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { a *= c; return a; }

  /// Multiplicative inverse of a series with unit leading coefficient times a
  /// rational, i.e. order coefficient must be a nonzero Rational.
  LaurentSeries inverse() const;

  /// Evaluates the truncated series at a numeric epsilon.
  double evaluate(double eps) const;

 private:
  void insert(int power, const PolyValue& v);
  std::map<int, PolyValue> coeffs_;
  int truncation_;
};

/// Laurent expansion of Gamma(-l + eps) around a non-positive integer -l
/// (l >= 0): leading term (-1)^l / (l! eps), then (-1)^l psi_0(l+1)/l!, and
/// further coefficients as permitted by the {g, z2, z3} value domain
/// (truncation <= 2). Rejects truncation < -1.
LaurentSeries gamma_laurent(long l, int truncation);

/// Laurent expansion of psi_j(-l + eps) around a non-positive integer -l
/// (l >= 0), j in {0, 1, 2}:
///   psi_0: -1/eps + psi_0(l+1) + (2 z2 - psi_1(l+1)) eps + psi_2(l+1)/2 eps^2
///   psi_1:  1/eps^2 + (2 z2 - psi_1(l+1)) + psi_2(l+1) eps
///   psi_2: -2/eps^3 + psi_2(l+1)
/// The supported truncations are 2, 1, 0 respectively; beyond that the
/// coefficients leave the {g, z2, z3} domain.
LaurentSeries psi_laurent(int order, long l, int truncation);

/// Taylor expansion of Gamma(z + eps) at a positive integer z, exact through
/// eps^truncation (truncation <= 3).
LaurentSeries gamma_taylor(long z, int truncation);

/// Taylor expansion of 1/Gamma(z + eps) at a positive integer z
/// (truncation <= 3), or the entire-function expansion at -l (truncation
/// <= 4), with leading term (-1)^l l! eps.
LaurentSeries inv_gamma_series(long z, int truncation);

/// Expansion of psi_j(z + eps) at any integer z: Taylor for z >= 1,
/// psi_laurent for z <= 0. Truncation capped at 2 - order for positive z.
LaurentSeries psi_series(int order, long z, int truncation);

}  // namespace vnskew

#endif  // VNSKEW_LAURENT_HPP
