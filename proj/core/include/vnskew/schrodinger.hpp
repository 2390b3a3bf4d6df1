#ifndef VNSKEW_SCHRODINGER_HPP
#define VNSKEW_SCHRODINGER_HPP

#include <stdexcept>

#include "vnskew/laurent.hpp"
#include "vnskew/poly_value.hpp"
#include "vnskew/rational.hpp"

namespace vnskew {

/// Parameters of the log-weighted Laguerre integral
///   int_0^inf x^q e^{-x} ln^d(x) L_s^(alpha)(x) L_t^(beta)(x) dx.
struct LogIntegralParams {
  long q = 0;
  long alpha = 0;
  long beta = 0;
  long s = 0;
  long t = 0;
  int log_power = 0;
};

/// Thrown by schrodinger_log when a polygamma argument in the closed form is
/// a non-positive integer; the caller must use limit_schrodinger_log.
struct IndeterminateCase : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown by limit_schrodinger_log when the summed Laurent series keeps a
/// nonzero pole coefficient. The integrals are finite, so this indicates a
/// transcription or implementation bug, never a data condition.
struct PoleResidueError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The plain (d = 0) integral as a finite double-binomial sum,
///   (-1)^{s+t} sum_{k=0}^{min(s,t)} C(q-a, s-k) C(q-b, t-k) (q+k)!/k!.
/// Degrees s < 0 or t < 0 yield 0 (L_{-1} = 0). Requires q >= 0.
Rational schrodinger(const LogIntegralParams& p);

/// The d-th q-derivative forms (d in {1,2,3}) with brackets Psi_0,
/// Psi_0^2 + Psi_1, Psi_0^3 + 3 Psi_0 Psi_1 + Psi_2. Throws IndeterminateCase
/// when any polygamma argument is a non-positive integer for some k.
PolyValue schrodinger_log(const LogIntegralParams& p, int d);

/// Evaluates the same sum with every argument shifted by a formal eps,
/// expands each term as a Laurent series, and returns the eps^0 coefficient
/// of the total; all pole coefficients must cancel exactly. Handles d in
/// {0,1,2,3} and any argument signs with q >= 0.
PolyValue limit_schrodinger_log(const LogIntegralParams& p, int d);

}  // namespace vnskew

#endif  // VNSKEW_SCHRODINGER_HPP
