#ifndef VNSKEW_CUMULANTS_HPP
#define VNSKEW_CUMULANTS_HPP

#include <optional>

#include "vnskew/dims.hpp"
#include "vnskew/poly_value.hpp"

namespace vnskew {

/// Exact first three cumulants of the von Neumann entropy S, plus the
/// skewness in double precision (absent when m = 1, where the variance
/// vanishes and the standardization is undefined).
struct CumulantSet {
  PolyValue kappa1;
  PolyValue kappa2;
  PolyValue kappa3;
  std::optional<double> skewness_float;
};

/// Exact first three cumulants of the induced entropy T over the
/// Wishart-Laguerre ensemble.
struct TCumulantSet {
  PolyValue kappa1T;
  PolyValue kappa2T;
  PolyValue kappa3T;
};

/// Mean of S: psi_0(mn+1) - psi_0(n) - (m+1)/(2n).
PolyValue kappa1(const Dims& d);

/// Variance of S:
/// -psi_1(mn+1) + (m+n)/(mn+1) psi_1(n) - (m+1)(m+2n+1)/(4n^2(mn+1)).
PolyValue kappa2(const Dims& d);

/// Third cumulant of S (the four-term closed form).
PolyValue kappa3(const Dims& d);

/// Skewness kappa3 / kappa2^{3/2}; rejects m = 1 (zero variance).
double skewness(const Dims& d);

CumulantSet cumulant_set(const Dims& d);

/// Moment/cumulant conversions up to order three.
struct Triple {
  PolyValue first, second, third;
};
Triple moments_from_cumulants(const PolyValue& k1, const PolyValue& k2,
                              const PolyValue& k3);
Triple cumulants_from_moments(const PolyValue& m1, const PolyValue& m2,
                              const PolyValue& m3);

/// Cumulants of T: kappa1T and kappa2T from the known first two moments,
/// kappa3T from the surviving-term closed form.
TCumulantSet t_cumulants(const Dims& d);

/// Raw moments of T: E[T] and E[T^2].
PolyValue t_moment1(const Dims& d);
PolyValue t_moment2(const Dims& d);

/// Normalized gamma-density log-moments: int_0^inf e^{-r} r^{a-1} ln^k r dr
/// divided by Gamma(a), i.e. 1, psi_0(a), psi_0^2+psi_1, or
/// psi_0^3 + 3 psi_0 psi_1 + psi_2 at a. Rejects k > 3 or a < 1.
PolyValue gamma_log_moment(long a, int log_power);

/// Third raw moment of S assembled from E_g[T^3] by the change of measures
/// between the fixed-trace and Wishart-Laguerre ensembles.
PolyValue moment3_S(const Dims& d, const PolyValue& expected_T3);

/// Third cumulant of S assembled from a given set of T-cumulants.
PolyValue kappa3_from_t(const Dims& d, const TCumulantSet& t);

/// kappa3_from_t applied to the closed-form t_cumulants; equals kappa3(d).
PolyValue kappa3_via_T(const Dims& d);

}  // namespace vnskew

#endif  // VNSKEW_CUMULANTS_HPP
