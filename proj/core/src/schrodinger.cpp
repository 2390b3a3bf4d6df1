#include "vnskew/schrodinger.hpp"

#include <algorithm>

#include "vnskew/polygamma.hpp"

namespace vnskew {

namespace {

void check_params(const LogIntegralParams& p) {
  if (p.q < 0) throw std::invalid_argument("schrodinger: q must be >= 0");
}

// Gamma(z + eps) for any integer z, to the deepest supported truncation.
LaurentSeries gamma_any(long z) {
  return z >= 1 ? gamma_taylor(z, 3) : gamma_laurent(-z, 2);
}

// Per-k polygamma arguments of the bracket Psi_j.
struct TermArgs {
  long x1, x2, x3, x4, x5;
};

TermArgs term_args(const LogIntegralParams& p, long k) {
  return {p.q + 1 + k, p.q - p.alpha + 1, p.q - p.beta + 1,
          p.q - p.alpha - p.s + 1 + k, p.q - p.beta - p.t + 1 + k};
}

PolyValue bracket_exact(const TermArgs& a, int d) {
  auto Psi = [&](int j) {
    return psi_int(j, a.x1) + psi_int(j, a.x2) + psi_int(j, a.x3) -
           psi_int(j, a.x4) - psi_int(j, a.x5);
  };
  PolyValue p0 = Psi(0);
  if (d == 1) return p0;
  PolyValue p1 = Psi(1);
  if (d == 2) return p0 * p0 + p1;
  return p0.pow(3) + Rational(3) * p0 * p1 + Psi(2);
}

LaurentSeries bracket_series(const TermArgs& a, int d) {
  auto Psi = [&](int j) {
    const int cap = 2 - j;
    return psi_series(j, a.x1, cap) + psi_series(j, a.x2, cap) +
           psi_series(j, a.x3, cap) - psi_series(j, a.x4, cap) -
           psi_series(j, a.x5, cap);
  };
  if (d == 0) return LaurentSeries::constant(PolyValue(1), LaurentSeries::kExactEverywhere);
  LaurentSeries p0 = Psi(0);
  if (d == 1) return p0;
  LaurentSeries p1 = Psi(1);
  if (d == 2) return p0 * p0 + p1;
  LaurentSeries three(LaurentSeries::kExactEverywhere);
  three.set_coefficient(0, PolyValue(3));
  return p0 * p0 * p0 + three * (p0 * p1) + Psi(2);
}

}  // namespace

Rational schrodinger(const LogIntegralParams& p) {
  check_params(p);
  if (p.s < 0 || p.t < 0) return Rational(0);
  Rational sum(0);
  const long kmax = std::min(p.s, p.t);
  for (long k = 0; k <= kmax; ++k) {
    sum += binomial_int(p.q - p.alpha, p.s - k) * binomial_int(p.q - p.beta, p.t - k) *
           Rational(factorial(p.q + k), factorial(k));
  }
  if ((p.s + p.t) % 2 == 1) sum = -sum;
  return sum;
}

PolyValue schrodinger_log(const LogIntegralParams& p, int d) {
  check_params(p);
  if (d < 1 || d > 3) throw std::invalid_argument("schrodinger_log: d must be 1..3");
  if (p.s < 0 || p.t < 0) return PolyValue();
  const long kmax = std::min(p.s, p.t);
  for (long k = 0; k <= kmax; ++k) {
    TermArgs a = term_args(p, k);
    if (a.x1 < 1 || a.x2 < 1 || a.x3 < 1 || a.x4 < 1 || a.x5 < 1) {
      throw IndeterminateCase("schrodinger_log: non-positive polygamma argument");
    }
  }
  PolyValue sum;
  for (long k = 0; k <= kmax; ++k) {
    TermArgs a = term_args(p, k);
    Rational pref = binomial_int(p.q - p.alpha, p.s - k) *
                    binomial_int(p.q - p.beta, p.t - k) *
                    Rational(factorial(p.q + k), factorial(k));
    sum += pref * bracket_exact(a, d);
  }
  if ((p.s + p.t) % 2 == 1) sum *= Rational(-1);
  return sum;
}

PolyValue limit_schrodinger_log(const LogIntegralParams& p, int d) {
  check_params(p);
  if (d < 0 || d > 3) throw std::invalid_argument("limit_schrodinger_log: d must be 0..3");
  if (p.s < 0 || p.t < 0) return PolyValue();
  const long kmax = std::min(p.s, p.t);
  LaurentSeries total(LaurentSeries::kExactEverywhere);
  for (long k = 0; k <= kmax; ++k) {
    TermArgs a = term_args(p, k);
    // C(q-alpha+eps, s-k) = Gamma(q-alpha+1+eps) / ((s-k)! Gamma(x4+eps)),
    // and likewise for the second binomial.
    LaurentSeries bin1 = gamma_any(a.x2) * inv_gamma_series(a.x4, a.x4 >= 1 ? 3 : 4);
    bin1 *= Rational(mpz_class(1), factorial(p.s - k));
    LaurentSeries bin2 = gamma_any(a.x3) * inv_gamma_series(a.x5, a.x5 >= 1 ? 3 : 4);
    bin2 *= Rational(mpz_class(1), factorial(p.t - k));
    LaurentSeries pref = bin1 * bin2 * gamma_any(a.x1);
    pref *= Rational(mpz_class(1), factorial(k));
    total += pref * bracket_series(a, d);
  }
  if ((p.s + p.t) % 2 == 1) total *= Rational(-1);
  if (total.truncation_order() < 0) {
    throw std::logic_error("limit_schrodinger_log: series depth insufficient for eps^0");
  }
  for (int pow = LaurentSeries::kMinPower; pow < 0; ++pow) {
    if (!total.coefficient(pow).is_zero()) {
      throw PoleResidueError("limit_schrodinger_log: pole residue nonzero at eps^" +
                             std::to_string(pow));
    }
  }
  return total.coefficient(0);
}

}  // namespace vnskew
