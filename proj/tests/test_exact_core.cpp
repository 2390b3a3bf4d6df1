#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quadmath.h>

#include <cmath>
#include <random>

#include "vnskew/laurent.hpp"
#include "vnskew/poly_value.hpp"
#include "vnskew/polygamma.hpp"
#include "vnskew/rational.hpp"

using namespace vnskew;

namespace {

// Independent series oracle for psi_j at real argument: direct summation of
// the defining series with an Euler-Maclaurin tail after K terms.
double psi_series_oracle(int j, double z, long terms) {
  if (j == 0) {
    double s = -kEulerGamma;
    for (long k = 0; k < terms; ++k) s += 1.0 / (k + 1) - 1.0 / (k + z);
    double K = static_cast<double>(terms);
    s += std::log((K + z) / (K + 1)) + 0.5 * (1.0 / (K + 1) - 1.0 / (K + z));
    return s;
  }
  double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^(j+1)
  double fact = 1.0;
  for (int i = 2; i <= j; ++i) fact *= i;
  double s = 0.0;
  for (long k = terms - 1; k >= 0; --k) s += std::pow(k + z, -(j + 1));
  double K = static_cast<double>(terms) + z;
  s += std::pow(K, -j) / j + 0.5 * std::pow(K, -(j + 1));
  return sign * fact * s;
}

// Reflection-based oracle for psi_1 near a negative argument.
double psi1_reflect_oracle(double x) {
  // psi_1(x) + psi_1(1-x) = pi^2 / sin^2(pi x)
  double pi = 3.14159265358979323846;
  double one_minus = 1.0 - x;
  double s = std::sin(pi * x);
  return pi * pi / (s * s) - psi_real(1, one_minus);
}

double psi0_reflect_oracle(double x) {
  // psi_0(1-x) - psi_0(x) = pi cot(pi x)
  double pi = 3.14159265358979323846;
  return psi_real(0, 1.0 - x) - pi / std::tan(pi * x);
}

double psi2_reflect_oracle(double x) {
  // Differentiating the psi_1 reflection: psi_2(x) - psi_2(1-x) =
  // -2 pi^3 cos(pi x)/sin^3(pi x).
  double pi = 3.14159265358979323846;
  double s = std::sin(pi * x);
  return psi_real(2, 1.0 - x) - 2.0 * pi * pi * pi * std::cos(pi * x) / (s * s * s);
}

PolyValue random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp_dist(0, 2);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> nterms(0, 4);
  PolyValue v;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m{static_cast<std::uint32_t>(exp_dist(rng)),
               static_cast<std::uint32_t>(exp_dist(rng)),
               static_cast<std::uint32_t>(exp_dist(rng))};
    v += PolyValue::monomial(m, Rational(coeff(rng), 1 + (i % 3)));
  }
  return v;
}

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1, 1) == Rational(0));
  CHECK(harmonic(4, 1) == Rational(11, 6));
  CHECK(harmonic(3, 2) == Rational(5, 4));
  CHECK_THROWS(harmonic(0, 1));
  CHECK_THROWS(harmonic(3, 0));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(5, 0) == Rational(1));
  CHECK(pochhammer(3, 3) == Rational(60));
  CHECK(pochhammer(1, 4) == Rational(24));
}

TEST_CASE("generalized binomial") {
  CHECK(binomial_int(5, 2) == Rational(10));
  CHECK(binomial_int(2, 5) == Rational(0));
  CHECK(binomial_int(-3, 2) == Rational(6));   // (-3)(-4)/2
  CHECK(binomial_int(-1, 3) == Rational(-1));  // (-1)(-2)(-3)/6
  CHECK(binomial_int(4, 0) == Rational(1));
}

TEST_CASE("psi_int closed forms") {
  CHECK(psi_int(0, 1) == -PolyValue::symbol_g());
  CHECK(psi_int(1, 2) == PolyValue::symbol_z2() - PolyValue(1));
  CHECK(psi_int(2, 2) == PolyValue(2) - Rational(2) * PolyValue::symbol_z3());
  CHECK_THROWS(psi_int(0, 0));
  CHECK_THROWS(psi_int(3, 4));
}

TEST_CASE("to_double substitutions") {
  CHECK((-PolyValue::symbol_g()).to_double() == doctest::Approx(-0.5772).epsilon(1e-4));
  CHECK(PolyValue::symbol_z3().to_double() == doctest::Approx(1.20206).epsilon(1e-5));
  CHECK(PolyValue().to_double() == 0.0);
}

TEST_CASE("psi_real reference values") {
  CHECK(psi_real(0, 1.0) == doctest::Approx(-0.5772156649).epsilon(1e-9));
  CHECK(psi_real(1, 1.0) == doctest::Approx(kZeta2).epsilon(1e-12));
  CHECK(psi_real(0, 10.5) ==
        doctest::Approx(psi_series_oracle(0, 10.5, 1000000)).epsilon(1e-10));
  CHECK(psi_real(1, 7.25) ==
        doctest::Approx(psi_series_oracle(1, 7.25, 1000000)).epsilon(1e-11));
  CHECK(psi_real(2, 3.5) ==
        doctest::Approx(psi_series_oracle(2, 3.5, 1000000)).epsilon(1e-11));
  CHECK(psi_real(3, 1.0) ==
        doctest::Approx(psi_series_oracle(3, 1.0, 1000000)).epsilon(1e-11));
  CHECK_THROWS(psi_real(0, 0.0));
  CHECK_THROWS(psi_real(0, -1.5));
}

TEST_CASE("psi_int agrees with psi_real at integers") {
  for (int j = 0; j <= 2; ++j) {
    for (long l = 1; l <= 20; ++l) {
      double exact = psi_int(j, l).to_double();
      double numeric = psi_real(j, static_cast<double>(l));
      CHECK(std::abs(exact - numeric) <= 1e-10 * (1.0 + std::abs(numeric)));
    }
  }
}

TEST_CASE("polygamma shift identities") {
  for (long l = 1; l <= 30; ++l) {
    for (long n = 0; n <= 30; ++n) {
      PolyValue c0, c1, c2;
      Rational s0(0), s1(0), s2(0);
      for (long k = 0; k < n; ++k) {
        mpz_class d = l + k;
        s0 += Rational(mpz_class(1), d);
        s1 += Rational(mpz_class(1), d * d);
        s2 += Rational(mpz_class(1), d * d * d);
      }
      CHECK(psi_int(0, l + n) == psi_int(0, l) + PolyValue(s0));
      CHECK(psi_int(1, l + n) == psi_int(1, l) - PolyValue(s1));
      CHECK(psi_int(2, l + n) == psi_int(2, l) + PolyValue(Rational(2) * s2));
    }
  }
}

TEST_CASE("PolyValue ring laws on random instances") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 1000; ++i) {
    PolyValue a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("PolyValue canonical printing") {
  PolyValue v = Rational(-3) * PolyValue::symbol_g() + PolyValue(Rational(65, 12));
  CHECK(v.str() == "-3*g + 65/12");
  CHECK(PolyValue().str() == "0");
  PolyValue w = PolyValue::symbol_g() * PolyValue::symbol_z2() -
                PolyValue::symbol_z3() + PolyValue(1);
  CHECK(w.str() == "g*z2 - z3 + 1");
}

TEST_CASE("gamma_laurent leading coefficients") {
  LaurentSeries g0 = gamma_laurent(0, 0);
  CHECK(g0.coefficient(-1) == PolyValue(1));
  CHECK(g0.coefficient(0) == -PolyValue::symbol_g());

  LaurentSeries g1 = gamma_laurent(1, 0);
  CHECK(g1.coefficient(-1) == PolyValue(Rational(-1)));
  CHECK(g1.coefficient(0) == -psi_int(0, 2));

  // General leading terms: (-1)^l / l! and (-1)^l psi_0(l+1) / l!.
  for (long l = 0; l <= 5; ++l) {
    LaurentSeries g = gamma_laurent(l, 1);
    Rational lead = Rational((l % 2 == 0) ? 1 : -1, 1) / Rational(factorial(l));
    CHECK(g.coefficient(-1) == PolyValue(lead));
    CHECK(g.coefficient(0) == lead * psi_int(0, l + 1));
  }
  CHECK_THROWS(gamma_laurent(2, -2));
}

TEST_CASE("gamma_laurent numeric check against tgamma") {
  double eps = 1e-6;
  LaurentSeries g = gamma_laurent(2, 2);
  double series = g.evaluate(eps);
  double exact = std::tgamma(-2.0 + eps);
  CHECK(std::abs(series - exact) <= 1e-4 * std::abs(exact));
}

TEST_CASE("psi_laurent printed forms") {
  LaurentSeries p0 = psi_laurent(0, 0, 0);
  CHECK(p0.coefficient(-1) == PolyValue(Rational(-1)));
  CHECK(p0.coefficient(0) == psi_int(0, 1));

  LaurentSeries p1 = psi_laurent(1, 0, 0);
  CHECK(p1.coefficient(-2) == PolyValue(1));
  CHECK(p1.coefficient(0) == PolyValue::symbol_z2());

  LaurentSeries p2 = psi_laurent(2, 3, 0);
  CHECK(p2.coefficient(-3) == PolyValue(Rational(-2)));
  CHECK(p2.coefficient(0) == psi_int(2, 4));

  CHECK_THROWS(psi_laurent(3, 0, 0));
}

TEST_CASE("psi_laurent numeric check via reflection oracle") {
  double eps = 1e-5;
  LaurentSeries p = psi_laurent(1, 3, 1);
  double series = p.evaluate(eps);
  double exact = psi1_reflect_oracle(-3.0 + eps);
  CHECK(std::abs(series - exact) <= 1e-4 * std::abs(exact));
}

namespace {

// Quad-precision oracles for the error-scaling test: at eps = 1e-4/1e-5 the
// pole terms reach ~1e15, so the O(eps^{t+1}) truncation signal sits far
// below double rounding noise and the comparison must run in __float128.
__float128 psi_real_q(int j, __float128 x) {
  const __float128 bern[] = {1.0Q / 6, -1.0Q / 30, 1.0Q / 42, -1.0Q / 30,
                             5.0Q / 66, -691.0Q / 2730, 7.0Q / 6};
  __float128 shift = 0, fj = 1;
  for (int i = 2; i <= j; ++i) fj *= i;
  __float128 sign = (j % 2 == 0) ? 1 : -1;
  while (x < 30) {
    shift -= sign * fj * powq(x, -(j + 1));
    x += 1;
  }
  __float128 r;
  if (j == 0) {
    r = logq(x) - 0.5Q / x;
    for (int k = 1; k <= 7; ++k) r -= bern[k - 1] / (2 * k) * powq(x, -2 * k);
  } else {
    __float128 s = (j % 2 == 0) ? -1 : 1;
    __float128 fact_jm1 = 1;
    for (int i = 2; i < j; ++i) fact_jm1 *= i;
    r = s * fact_jm1 * powq(x, -j) + s * 0.5Q * fact_jm1 * j * powq(x, -(j + 1));
    for (int k = 1; k <= 7; ++k) {
      __float128 ratio = 1;
      for (int i = 2 * k + 1; i < 2 * k + j; ++i) ratio *= i;
      r += s * bern[k - 1] * ratio * powq(x, -2 * k - j);
    }
  }
  return r + shift;
}

// Rational -> quad with a hi/lo double split so numerators and denominators
// keep ~106 bits.
__float128 rational_q(const Rational& r) {
  auto q = [](const mpz_class& z) {
    double hi = z.get_d();
    mpz_class rem = z - mpz_class(hi);
    return static_cast<__float128>(hi) + static_cast<__float128>(rem.get_d());
  };
  return q(r.num()) / q(r.den());
}

__float128 poly_q(const PolyValue& v) {
  const __float128 g_q = 0.577215664901532860606512090082402431Q;
  const __float128 z2_q = M_PIq * M_PIq / 6;
  const __float128 z3_q = 1.202056903159594285399738161511449991Q;
  __float128 total = 0;
  for (const auto& [m, c] : v.terms()) {
    __float128 t = rational_q(c);
    for (std::uint32_t i = 0; i < m.g; ++i) t *= g_q;
    for (std::uint32_t i = 0; i < m.z2; ++i) t *= z2_q;
    for (std::uint32_t i = 0; i < m.z3; ++i) t *= z3_q;
    total += t;
  }
  return total;
}

__float128 evaluate_q(const LaurentSeries& s, __float128 eps) {
  __float128 total = 0;
  for (const auto& [p, v] : s.coefficients()) {
    total += poly_q(v) * powq(eps, p);
  }
  return total;
}

}  // namespace

TEST_CASE("Laurent truncation-order error scaling") {
  // For a series exact through eps^t the numeric error is O(eps^{t+1}), so
  // err(1e-4)/err(1e-5) should be close to 10^{t+1}.
  const __float128 pi_q = M_PIq;
  auto ratio_of_errors = [](const LaurentSeries& s, auto&& oracle) {
    __float128 e4 = fabsq(evaluate_q(s, 1e-4Q) - oracle(1e-4Q));
    __float128 e5 = fabsq(evaluate_q(s, 1e-5Q) - oracle(1e-5Q));
    return static_cast<double>(e4 / e5);
  };
  for (long l = 0; l <= 5; ++l) {
    __float128 dl = l;
    // gamma: t = 2
    double r = ratio_of_errors(gamma_laurent(l, 2),
                               [&](__float128 e) { return tgammaq(-dl + e); });
    CHECK(r > 1e3 / 5.0);
    CHECK(r < 1e3 * 5.0);
    // psi_0(x) = psi_0(1-x) - pi cot(pi x); t = 2
    r = ratio_of_errors(psi_laurent(0, l, 2), [&](__float128 e) {
      __float128 x = -dl + e;
      return psi_real_q(0, 1 - x) - pi_q * cosq(pi_q * x) / sinq(pi_q * x);
    });
    CHECK(r > 1e3 / 5.0);
    CHECK(r < 1e3 * 5.0);
    // psi_1(x) = pi^2/sin^2(pi x) - psi_1(1-x); t = 1
    r = ratio_of_errors(psi_laurent(1, l, 1), [&](__float128 e) {
      __float128 x = -dl + e, s = sinq(pi_q * x);
      return pi_q * pi_q / (s * s) - psi_real_q(1, 1 - x);
    });
    CHECK(r > 1e2 / 5.0);
    CHECK(r < 1e2 * 5.0);
    // psi_2(x) = psi_2(1-x) - 2 pi^3 cos(pi x)/sin^3(pi x); t = 0
    r = ratio_of_errors(psi_laurent(2, l, 0), [&](__float128 e) {
      __float128 x = -dl + e, s = sinq(pi_q * x);
      return psi_real_q(2, 1 - x) - 2 * pi_q * pi_q * pi_q * cosq(pi_q * x) / (s * s * s);
    });
    CHECK(r > 10.0 / 5.0);
    CHECK(r < 10.0 * 5.0);
  }
}

TEST_CASE("LaurentSeries arithmetic and truncation propagation") {
  LaurentSeries a(2);
  a.set_coefficient(-1, PolyValue(1));
  a.set_coefficient(0, PolyValue(2));
  LaurentSeries b(1);
  b.set_coefficient(1, PolyValue(3));
  LaurentSeries p = a * b;
  CHECK(p.coefficient(0) == PolyValue(3));
  // b is only exact through eps^1, so the product is exact through
  // min(T_a + ord_b, T_b + ord_a) = min(3, 0) = 0 and eps^1 is dropped.
  CHECK(p.truncation_order() == 0);
  CHECK(p.coefficient(1).is_zero());

  LaurentSeries inv = a.inverse();
  LaurentSeries one = a * inv;
  CHECK(one.coefficient(0) == PolyValue(1));
  CHECK(one.coefficient(1).is_zero());
  CHECK(one.coefficient(2).is_zero());

  // Pole floor is enforced.
  LaurentSeries deep(0);
  deep.set_coefficient(-3, PolyValue(1));
  CHECK_THROWS(deep * deep);
}
