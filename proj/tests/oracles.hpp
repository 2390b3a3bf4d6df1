#ifndef VNSKEW_TESTS_ORACLES_HPP
#define VNSKEW_TESTS_ORACLES_HPP

// Test-only quadrature oracles, independent of the exact-arithmetic paths
// they are used to check.

#include <cmath>
#include <functional>

#include "vnskew/laguerre.hpp"

namespace vnskew::oracles {

/// Computes int_0^inf ln^d(x) base(x) dx for base with (at most) polynomial
/// growth times e^{-x} decay. Splits at x = 1 and substitutes x = e^{-u} on
/// (0,1), x = 1+v on (1,inf); both halves become analytic integrands for
/// Gauss-Laguerre, so the log endpoint singularity never degrades the rate.
inline double log_split_integral(int d, const std::function<double(double)>& base,
                                 double rel_tol = 1e-12) {
  auto left = [&](double u) {
    double x = std::exp(-u);
    return std::pow(-u, d) * base(x) * x;
  };
  auto right = [&](double v) {
    double x = 1.0 + v;
    return std::pow(std::log(x), d) * base(x);
  };
  return gauss_laguerre_adaptive(left, rel_tol, 128, 2048) +
         gauss_laguerre_adaptive(right, rel_tol, 128, 2048);
}

}  // namespace vnskew::oracles

#endif  // VNSKEW_TESTS_ORACLES_HPP
