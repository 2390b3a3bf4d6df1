#include "vnskew/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "vnskew/laguerre.hpp"
#include "vnskew/rational.hpp"

namespace vnskew {

namespace {

// Laguerre L_N and L_{N-1} (alpha = 0) at x, co-scaled to avoid overflow; the
// common scale cancels in Newton ratios. `exponent` accumulates the scale in
// powers of 2^512 for callers that need log magnitudes.
struct ScaledLaguerrePair {
  double ln;      // ~ L_N / 2^(512*exponent)
  double lnm1;    // ~ L_{N-1} / 2^(512*exponent)
  long exponent;
};

ScaledLaguerrePair laguerre_scaled(int N, double x) {
  double p0 = 1.0, p1 = 1.0 - x;
  long e = 0;
  if (N == 0) return {p0, 0.0, 0};
  for (int k = 1; k < N; ++k) {
    double p2 = ((2 * k + 1 - x) * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
    double m = std::max(std::abs(p0), std::abs(p1));
    if (m > 1e150) {
      p0 = std::ldexp(p0, -512);
      p1 = std::ldexp(p1, -512);
      ++e;
    } else if (m > 0 && m < 1e-150) {
      p0 = std::ldexp(p0, 512);
      p1 = std::ldexp(p1, 512);
      --e;
    }
  }
  return {p1, p0, e};
}

GaussLaguerreRule build_gauss_laguerre(int N) {
  GaussLaguerreRule rule;
  rule.nodes.resize(N);
  rule.weights_exp.resize(N);
  const double ln2_512 = 512.0 * std::log(2.0);
  double z = 0.0;
  for (int i = 1; i <= N; ++i) {
    if (i == 1) {
      z = 3.0 / (1.0 + 2.4 * N);
    } else if (i == 2) {
      z += 15.0 / (1.0 + 2.5 * N);
    } else {
      double ai = i - 2;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 3]);
    }
    for (int iter = 0; iter < 200; ++iter) {
      ScaledLaguerrePair p = laguerre_scaled(N, z);
      double deriv = N * (p.ln - p.lnm1) / z;
      double dz = p.ln / deriv;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::abs(z)) break;
    }
    rule.nodes[i - 1] = z;
    // w e^x = e^x x / ((N+1) L_{N+1}(x))^2, assembled in log space.
    ScaledLaguerrePair p = laguerre_scaled(N + 1, z);
    double log_l = std::log(std::abs(p.ln)) + p.exponent * ln2_512;
    double log_w = z + std::log(z) - 2.0 * (log_l + std::log(static_cast<double>(N + 1)));
    rule.weights_exp[i - 1] = std::exp(log_w);
  }
  return rule;
}

GaussLegendreRule build_gauss_legendre(int N) {
  GaussLegendreRule rule;
  rule.nodes.resize(N);
  rule.weights.resize(N);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (N + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (N + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 1; k < N; ++k) {
        double p2 = ((2 * k + 1) * z * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      pp = N * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[N - 1 - i] = z;
    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[N - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre_rule: need n >= 1");
  static std::mutex mu;
  static std::map<int, GaussLaguerreRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_laguerre(n)).first;
  return it->second;
}

double gauss_laguerre(int nodes, const std::function<double(double)>& f) {
  const GaussLaguerreRule& rule = gauss_laguerre_rule(nodes);
  double sum = 0.0;
  for (int i = nodes - 1; i >= 0; --i) {
    sum += rule.weights_exp[i] * f(rule.nodes[i]);
  }
  return sum;
}

double gauss_laguerre_adaptive(const std::function<double(double)>& f, double rel_tol,
                               int start_nodes, int max_nodes) {
  double prev = gauss_laguerre(start_nodes, f);
  for (int n = 2 * start_nodes; n <= max_nodes; n *= 2) {
    double cur = gauss_laguerre(n, f);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("gauss_laguerre_adaptive: no convergence by node doubling");
}

const GaussLegendreRule& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels) {
  const GaussLegendreRule& rule = gauss_legendre_rule(32);
  double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total += 0.5 * h * acc;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_panels) {
  double prev = integrate_panels(f, a, b, 1);
  for (int p = 2; p <= max_panels; p *= 2) {
    double cur = integrate_panels(f, a, b, p);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("integrate_adaptive: no convergence");
}

double simplex_quadrature_m2(long n, const std::function<double(double)>& integrand,
                             double tolerance) {
  if (n < 2) throw std::invalid_argument("simplex_quadrature_m2: need n >= 2");
  // Z = int (2x-1)^2 (x(1-x))^{n-2} dx expands into three Beta integrals.
  auto beta_int = [](long p, long q) {
    return Rational(factorial(p) * factorial(q), factorial(p + q + 1));
  };
  Rational z = Rational(4) * beta_int(n, n - 2) - Rational(4) * beta_int(n - 1, n - 2) +
               beta_int(n - 2, n - 2);
  const double inv_z = 1.0 / z.to_double();
  auto weighted = [&](double x) {
    double u = 2.0 * x - 1.0;
    double core = u * u * inv_z;
    if (n > 2) core *= std::pow(x * (1.0 - x), static_cast<double>(n - 2));
    return integrand(x) * core;
  };
  return integrate_adaptive(weighted, 0.0, 1.0, tolerance);
}

}  // namespace vnskew
