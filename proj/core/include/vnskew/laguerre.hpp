#ifndef VNSKEW_LAGUERRE_HPP
#define VNSKEW_LAGUERRE_HPP

#include <functional>
#include <span>
#include <vector>

#include "vnskew/dims.hpp"
#include "vnskew/rational.hpp"

namespace vnskew {

/// Generalized Laguerre polynomial L_k^(alpha)(x),
/// sum_{i=0}^{k} (-1)^i C(alpha+k, k-i) x^i / i!.
double laguerre(long k, long alpha, double x);

/// Exact evaluation at a rational point.
Rational laguerre_rational(long k, long alpha, const Rational& x);

/// Wishart-Laguerre correlation kernel
///   K(x, y) = sqrt(e^{-x-y} (xy)^{n-m}) sum_{k<m} k!/(n-m+k)! L_k(x) L_k(y)
/// with L_k = L_k^{(n-m)}. Requires x, y > 0.
double kernel(const Dims& d, double x, double y);

/// One-point eigenvalue density in Christoffel-Darboux form,
///   g1(x) = (m-1)!/(n-1)! x^{n-m} e^{-x} ((L_{m-1}^{(n-m+1)})^2 -
///            L_{m-2}^{(n-m+1)} L_m^{(n-m+1)}).
/// Requires m >= 2 (use kernel(d,x,x)/m for m = 1).
double g1_density(const Dims& d, double x);

/// Joint density of N <= 3 arbitrary eigenvalues: (m-N)!/m! times the N x N
/// kernel determinant.
double npoint_density(const Dims& d, std::span<const double> points);

/// Gauss-Laguerre rule for weight e^{-x} on (0, inf). `weights_exp` holds
/// w_i e^{x_i}, computed in log space so large node counts do not underflow.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights_exp;
};

/// Cached rule of the given size.
const GaussLaguerreRule& gauss_laguerre_rule(int n);

/// Integrates a full integrand f over (0, inf) with an n-node rule:
/// sum_i w_i e^{x_i} f(x_i).
double gauss_laguerre(int nodes, const std::function<double(double)>& f);

/// Node-doubling variant: starts at `start_nodes` and doubles until two
/// successive evaluations agree to `rel_tol`; throws std::runtime_error on
/// non-convergence at `max_nodes`.
double gauss_laguerre_adaptive(const std::function<double(double)>& f,
                               double rel_tol = 1e-8, int start_nodes = 256,
                               int max_nodes = 4096);

}  // namespace vnskew

#endif  // VNSKEW_LAGUERRE_HPP
