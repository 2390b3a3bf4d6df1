#ifndef VNSKEW_QUADRATURE_HPP
#define VNSKEW_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace vnskew {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given size.
const GaussLegendreRule& gauss_legendre_rule(int n);

/// Composite 32-point Gauss-Legendre over [a, b] with `panels` uniform panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels);

/// Panel-doubling integration over [a, b] to a relative tolerance; throws
/// std::runtime_error on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_panels = 1 << 14);

/// Expectation of `integrand` under the m = 2 fixed-trace one-eigenvalue
/// density rho(x) proportional to (2x-1)^2 (x(1-x))^{n-2} on (0, 1), with the
/// exact Beta-integral normalization. Adaptive to `tolerance`.
double simplex_quadrature_m2(long n, const std::function<double(double)>& integrand,
                             double tolerance);

}  // namespace vnskew

#endif  // VNSKEW_QUADRATURE_HPP
