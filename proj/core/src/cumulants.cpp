#include "vnskew/cumulants.hpp"

#include <cmath>
#include <stdexcept>

#include "vnskew/polygamma.hpp"

namespace vnskew {

namespace {

Rational rat(const mpz_class& num, const mpz_class& den) { return Rational(num, den); }

}  // namespace

PolyValue kappa1(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  return psi_int(0, d.mn() + 1) - psi_int(0, d.n) - PolyValue(rat(m + 1, 2 * n));
}

PolyValue kappa2(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  const mpz_class mn1 = m * n + 1;
  return -psi_int(1, d.mn() + 1) + rat(m + n, mn1) * psi_int(1, d.n) -
         PolyValue(rat((m + 1) * (m + 2 * n + 1), 4 * n * n * mn1));
}

PolyValue kappa3(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  const mpz_class mn1 = m * n + 1, mn2 = m * n + 2;
  PolyValue r = psi_int(2, d.mn() + 1);
  r -= rat(m * m + 3 * m * n + n * n + 1, mn1 * mn2) * psi_int(2, d.n);
  r += rat((m * m - 1) * (m * n - 3 * n * n + 1), n * mn1 * mn1 * mn2) *
       psi_int(1, d.n + 1);
  r -= PolyValue(rat((m + 1) * (2 * m * m * m * n + 3 * m * m * n * n + 2 * m * m +
                                4 * m * n * n * n + 15 * m * n * n + 12 * m * n -
                                2 * n * n + 6 * n + 6),
                     4 * n * n * n * mn1 * mn1 * mn2));
  return r;
}

double skewness(const Dims& d) {
  if (d.m == 1) throw std::invalid_argument("skewness: undefined at m = 1 (zero variance)");
  double k2 = kappa2(d).to_double();
  double k3 = kappa3(d).to_double();
  return k3 / std::pow(k2, 1.5);
}

CumulantSet cumulant_set(const Dims& d) {
  CumulantSet s{kappa1(d), kappa2(d), kappa3(d), std::nullopt};
  if (d.m > 1) s.skewness_float = skewness(d);
  return s;
}

Triple moments_from_cumulants(const PolyValue& k1, const PolyValue& k2,
                              const PolyValue& k3) {
  PolyValue m1 = k1;
  PolyValue m2 = k2 + k1 * k1;
  PolyValue m3 = k3 + Rational(3) * k2 * k1 + k1.pow(3);
  return {m1, m2, m3};
}

Triple cumulants_from_moments(const PolyValue& m1, const PolyValue& m2,
                              const PolyValue& m3) {
  PolyValue k1 = m1;
  PolyValue k2 = m2 - m1 * m1;
  PolyValue k3 = m3 - Rational(3) * m2 * m1 + Rational(2) * m1.pow(3);
  return {k1, k2, k3};
}

PolyValue t_moment1(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  return rat(m * n, 1) * psi_int(0, d.n) + PolyValue(rat(m * (m + 1), 2));
}

PolyValue t_moment2(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  const PolyValue p0 = psi_int(0, d.n);
  return rat(m * n * (m + n), 1) * psi_int(1, d.n) +
         rat(m * n * (m * n + 1), 1) * (p0 * p0) +
         rat(m * (m * m * n + m * n + m + 2 * n + 1), 1) * p0 +
         PolyValue(rat(m * (m + 1) * (m * m + m + 2), 4));
}

TCumulantSet t_cumulants(const Dims& d) {
  const mpz_class m = d.m, n = d.n;
  const PolyValue p0 = psi_int(0, d.n);
  const PolyValue p1 = psi_int(1, d.n);
  const PolyValue p2 = psi_int(2, d.n);

  PolyValue k1 = t_moment1(d);

  PolyValue k2 = rat(m * n * (m + n), 1) * p1 + rat(m * n, 1) * (p0 * p0) +
                 rat(m * (m + 2 * n + 1), 1) * p0 + PolyValue(rat(m * (m + 1), 2));

  PolyValue k3 = rat(m * n * (m * m + 3 * m * n + n * n + 1), 1) * p2 +
                 rat(6 * m * n * (m + n), 1) * (p0 * p1) +
                 rat(m * (2 * m * m + 12 * m * n + 3 * m + 6 * n * n + 3 * n + 1), 1) * p1 +
                 rat(2 * m * n, 1) * p0.pow(3) +
                 rat(3 * m * (m + 3 * n + 1), 1) * (p0 * p0) +
                 rat(6 * m * (m + n + 1), 1) * p0 + PolyValue(rat(m * (m + 1), 1));

  return {k1, k2, k3};
}

PolyValue gamma_log_moment(long a, int log_power) {
  if (a < 1) throw std::invalid_argument("gamma_log_moment: a must be >= 1");
  switch (log_power) {
    case 0:
      return PolyValue(1);
    case 1:
      return psi_int(0, a);
    case 2: {
      PolyValue p0 = psi_int(0, a);
      return p0 * p0 + psi_int(1, a);
    }
    case 3: {
      PolyValue p0 = psi_int(0, a);
      return p0.pow(3) + Rational(3) * p0 * psi_int(1, a) + psi_int(2, a);
    }
    default:
      throw std::invalid_argument("gamma_log_moment: log power must be 0..3");
  }
}

PolyValue moment3_S(const Dims& d, const PolyValue& expected_T3) {
  const long a = d.mn() + 3;
  const PolyValue es1 = kappa1(d);
  const PolyValue es2 = kappa2(d) + es1 * es1;
  const Rational poch = pochhammer(d.mn(), 3);
  PolyValue num = -expected_T3;
  num += poch * (Rational(3) * gamma_log_moment(a, 1) * es2);
  num -= poch * (Rational(3) * gamma_log_moment(a, 2) * es1);
  num += poch * gamma_log_moment(a, 3);
  return num / poch;
}

PolyValue kappa3_from_t(const Dims& d, const TCumulantSet& t) {
  const mpz_class m = d.m, n = d.n;
  const mpz_class mn = m * n, mn1 = mn + 1;
  PolyValue inner = -t.kappa3T;
  inner += rat(6, mn) * (t.kappa1T * t.kappa2T);
  inner += rat(3 * (2 * mn + 3), mn1) * t.kappa2T;
  inner -= rat(4, mn * mn) * t.kappa1T.pow(3);
  inner -= rat(3 * (3 * mn + 4), mn * mn1) * (t.kappa1T * t.kappa1T);
  inner -= rat(6 * (mn + 2), mn1) * t.kappa1T;
  return inner / pochhammer(d.mn(), 3) + psi_int(2, d.mn() + 1);
}

PolyValue kappa3_via_T(const Dims& d) { return kappa3_from_t(d, t_cumulants(d)); }

}  // namespace vnskew
