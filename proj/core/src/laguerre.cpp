#include "vnskew/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace vnskew {

double laguerre(long k, long alpha, double x) {
  if (k < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
  double p0 = 1.0;
  if (k == 0) return p0;
  double p1 = alpha + 1 - x;
  for (long i = 1; i < k; ++i) {
    double p2 = ((2 * i + alpha + 1 - x) * p1 - (i + alpha) * p0) / (i + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Rational laguerre_rational(long k, long alpha, const Rational& x) {
  if (k < 0) throw std::invalid_argument("laguerre_rational: degree must be >= 0");
  Rational sum(0);
  Rational xpow(1);
  for (long i = 0; i <= k; ++i) {
    Rational term = binomial_int(alpha + k, k - i) * xpow / Rational(factorial(i));
    sum += (i % 2 == 0) ? term : -term;
    xpow *= x;
  }
  return sum;
}

double kernel(const Dims& d, double x, double y) {
  if (!(x > 0) || !(y > 0)) throw std::invalid_argument("kernel: points must be positive");
  const long a = d.n - d.m;
  double sum = 0.0;
  // k!/(n-m+k)!, advanced incrementally.
  double ratio = std::exp(-std::lgamma(static_cast<double>(a + 1)));
  double lx0 = 1.0, ly0 = 1.0;
  double lx1 = a + 1 - x, ly1 = a + 1 - y;
  for (long k = 0; k < d.m; ++k) {
    double lx = (k == 0) ? lx0 : lx1;
    double ly = (k == 0) ? ly0 : ly1;
    sum += ratio * lx * ly;
    if (k >= 1) {
      double lx2 = ((2 * k + a + 1 - x) * lx1 - (k + a) * lx0) / (k + 1);
      double ly2 = ((2 * k + a + 1 - y) * ly1 - (k + a) * ly0) / (k + 1);
      lx0 = lx1; lx1 = lx2;
      ly0 = ly1; ly1 = ly2;
    }
    ratio *= static_cast<double>(k + 1) / static_cast<double>(a + k + 1);
  }
  double envelope = std::exp(0.5 * (a * (std::log(x) + std::log(y)) - x - y));
  return envelope * sum;
}

double g1_density(const Dims& d, double x) {
  if (d.m < 2) throw std::invalid_argument("g1_density: requires m >= 2");
  if (!(x > 0)) throw std::invalid_argument("g1_density: point must be positive");
  const long a = d.n - d.m + 1;
  double lm1 = laguerre(d.m - 1, a, x);
  double lm2 = laguerre(d.m - 2, a, x);
  double lm = laguerre(d.m, a, x);
  double pref = std::exp(std::lgamma(static_cast<double>(d.m)) -
                         std::lgamma(static_cast<double>(d.n)) +
                         (d.n - d.m) * std::log(x) - x);
  return pref * (lm1 * lm1 - lm2 * lm);
}

double npoint_density(const Dims& d, std::span<const double> points) {
  const std::size_t N = points.size();
  if (N == 0 || N > 3) throw std::invalid_argument("npoint_density: N must be 1..3");
  if (static_cast<long>(N) > d.m) throw std::invalid_argument("npoint_density: N exceeds m");
  double K[3][3];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      K[i][j] = K[j][i] = kernel(d, points[i], points[j]);
    }
  }
  double det;
  if (N == 1) {
    det = K[0][0];
  } else if (N == 2) {
    det = K[0][0] * K[1][1] - K[0][1] * K[1][0];
  } else {
    det = K[0][0] * (K[1][1] * K[2][2] - K[1][2] * K[2][1]) -
          K[0][1] * (K[1][0] * K[2][2] - K[1][2] * K[2][0]) +
          K[0][2] * (K[1][0] * K[2][1] - K[1][1] * K[2][0]);
  }
  double pref = 1.0;
  for (long i = d.m - static_cast<long>(N) + 1; i <= d.m; ++i) pref /= i;
  return pref * det;
}

}  // namespace vnskew
