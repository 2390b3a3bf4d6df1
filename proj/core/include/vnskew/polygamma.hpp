#ifndef VNSKEW_POLYGAMMA_HPP
#define VNSKEW_POLYGAMMA_HPP

#include "vnskew/poly_value.hpp"
#include "vnskew/rational.hpp"

namespace vnskew {

/// Generalized harmonic number H_{l-1,p} = sum_{k=1}^{l-1} 1/k^p.
/// The empty sum (l = 1) is 0. Requires l >= 1, p >= 1.
Rational harmonic(long l, long p);

/// Exact polygamma value psi_j(l) at a positive integer argument, as a
/// polynomial in {g, z2, z3}:
///   psi_0(l) = -g + H_{l-1,1}
///   psi_1(l) = z2 - H_{l-1,2}
///   psi_2(l) = -2*z3 + 2*H_{l-1,3}
/// Only orders j in {0, 1, 2} are supported; non-positive arguments must go
/// through the Laurent expansions instead.
PolyValue psi_int(int order, long l);

/// Double-precision psi_j(x) for x > 0, via upward recurrence to a large
/// argument followed by the asymptotic series with Bernoulli coefficients
/// through order 14. Supports j in {0, 1, 2, 3}. Relative error <= 1e-12
/// for x >= 1.
double psi_real(int order, double x);

}  // namespace vnskew

#endif  // VNSKEW_POLYGAMMA_HPP
