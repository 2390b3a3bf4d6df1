#include "vnskew/polygamma.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace vnskew {

namespace {

// Prefix sums of 1/k^p are shared across the sweep grids, so cache them.
// Guarded by a mutex; values are returned by copy.
struct HarmonicCache {
  std::mutex mu;
  // cache[p-1][l] = H_{l,p}, built incrementally.
  std::vector<std::vector<Rational>> rows{3};
};

HarmonicCache& harmonic_cache() {
  static HarmonicCache c;
  return c;
}

}  // namespace

Rational harmonic(long l, long p) {
  if (l < 1) throw std::invalid_argument("harmonic: l must be >= 1");
  if (p < 1) throw std::invalid_argument("harmonic: p must be >= 1");
  if (p <= 3) {
    auto& cache = harmonic_cache();
    std::lock_guard lock(cache.mu);
    auto& row = cache.rows[p - 1];
    if (row.empty()) row.push_back(Rational(0));  // H_{0,p}
    while (static_cast<long>(row.size()) < l) {
      long k = static_cast<long>(row.size());
      mpz_class kp = k;
      for (long i = 1; i < p; ++i) kp *= k;
      row.push_back(row.back() + Rational(mpz_class(1), kp));
    }
    return row[l - 1];
  }
  Rational sum(0);
  for (long k = 1; k < l; ++k) {
    mpz_class kp = k;
    for (long i = 1; i < p; ++i) kp *= k;
    sum += Rational(mpz_class(1), kp);
  }
  return sum;
}

PolyValue psi_int(int order, long l) {
  if (l < 1) throw std::invalid_argument("psi_int: argument must be a positive integer");
  switch (order) {
    case 0:
      return PolyValue(harmonic(l, 1)) - PolyValue::symbol_g();
    case 1:
      return PolyValue::symbol_z2() - PolyValue(harmonic(l, 2));
    case 2:
      return PolyValue(Rational(2) * harmonic(l, 3)) -
             Rational(2) * PolyValue::symbol_z3();
    default:
      throw std::invalid_argument("psi_int: order must be 0, 1 or 2");
  }
}

namespace {

// Bernoulli numbers B_2, B_4, ..., B_14.
constexpr double kBernoulli[] = {1.0 / 6,   -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6};

// Asymptotic psi_j(x) for large x, Bernoulli tail through B_14.
double psi_asymptotic(int j, double x) {
  if (j == 0) {
    double r = std::log(x) - 0.5 / x;
    double x2 = 1.0 / (x * x);
    double p = x2;
    for (int k = 1; k <= 7; ++k) {
      r -= kBernoulli[k - 1] / (2 * k) * p;
      p *= x2;
    }
    return r;
  }
  // d^j/dx^j of the j = 0 series.
  double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^(j-1)
  double fact_jm1 = 1.0;
  for (int i = 2; i < j; ++i) fact_jm1 *= i;
  double fact_j = fact_jm1 * j;
  double r = sign * fact_jm1 / std::pow(x, j) + sign * 0.5 * fact_j / std::pow(x, j + 1);
  for (int k = 1; k <= 7; ++k) {
    // j-th derivative of -B_2k/(2k) x^(-2k) is
    // (-1)^(j-1) B_2k (2k+1)...(2k+j-1) x^(-2k-j).
    double ratio = 1.0;
    for (int i = 2 * k + 1; i < 2 * k + j; ++i) ratio *= i;
    r += sign * kBernoulli[k - 1] * ratio * std::pow(x, -2 * k - j);
  }
  return r;
}

}  // namespace

double psi_real(int order, double x) {
  if (!(x > 0)) throw std::invalid_argument("psi_real: argument must be positive");
  if (order < 0 || order > 3) throw std::invalid_argument("psi_real: order must be in 0..3");
  // psi_j(x) = psi_j(x+1) - (-1)^j j! / x^(j+1); shift up until x >= 12.
  double shift = 0.0;
  double fj = 1.0;
  for (int i = 2; i <= order; ++i) fj *= i;
  double sign = (order % 2 == 0) ? 1.0 : -1.0;
  while (x < 12.0) {
    shift -= sign * fj / std::pow(x, order + 1);
    x += 1.0;
  }
  return psi_asymptotic(order, x) + shift;
}

}  // namespace vnskew
