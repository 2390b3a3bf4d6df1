#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vnskew/identities.hpp"
#include "vnskew/polygamma.hpp"
#include "vnskew/rational.hpp"

using namespace vnskew;

namespace {

PolyValue g() { return PolyValue::symbol_g(); }
PolyValue z2() { return PolyValue::symbol_z2(); }

// Float evaluators of the A6..A9 closed forms at real a, for the
// finite-difference consistency check against A22..A25.
double a6to9_float(int idx, long n, double a) {
  double pa0 = psi_real(0, a + n + 1), pb0 = psi_real(0, a + 1);
  double N = static_cast<double>(n);
  switch (idx) {
    case 6:
      return (a + N) * pa0 * pa0 - (2 * a + 2 * N + 1) * pa0 - a * pb0 * pb0 +
             (2 * a + 1) * pb0 + 2 * N;
    case 7:
      return 0.5 * (-a * a + a + N * N + N) * pa0 * pa0 +
             0.25 * (6 * a * a + 4 * a * N - 2 * a - 2 * N * N - 6 * N - 2) * pa0 +
             0.5 * (a - 1) * a * pb0 * pb0 + 0.25 * (-6 * a * a + 2 * a + 2) * pb0 +
             0.25 * N * (-6 * a + N + 5);
    case 8:
      return (2 * a * a * a - 3 * a * a + a + 2 * N * N * N + 3 * N * N + N) / 6 *
                 pa0 * pa0 -
             (22 * a * a * a + 12 * a * a * N - 21 * a * a - 6 * a * N * N -
              24 * a * N - a + 4 * N * N * N + 15 * N * N + 17 * N + 3) /
                 18 * pa0 -
             a * (2 * a * a - 3 * a + 1) / 6 * pb0 * pb0 +
             (22 * a * a * a - 21 * a * a - a + 3) / 18 * pb0 +
             N * (132 * a * a - 30 * a * N - 192 * a + 8 * N * N + 39 * N + 79) / 108;
    case 9:
      return -(a * a * a * a - 2 * a * a * a + a * a - N * N * N * N -
               2 * N * N * N - N * N) /
                 4 * pa0 * pa0 +
             (25 * std::pow(a, 4) + 12 * a * a * a * N - 38 * a * a * a -
              6 * a * a * N * N - 30 * a * a * N + 11 * a * a + 4 * a * N * N * N +
              18 * a * N * N + 26 * a * N + 2 * a - 3 * std::pow(N, 4) -
              14 * N * N * N - 21 * N * N - 10 * N) /
                 24 * pa0 +
             (a - 1) * (a - 1) * a * a / 4 * pb0 * pb0 -
             a * (25 * a * a * a - 38 * a * a + 11 * a + 2) / 24 * pb0 +
             N *
                 (-300 * a * a * a + 78 * a * a * N + 606 * a * a - 28 * a * N * N -
                  162 * a * N - 410 * a + 9 * N * N * N + 50 * N * N + 111 * N +
                  118) /
                 288;
    default:
      throw std::logic_error("a6to9_float");
  }
}

}  // namespace

TEST_CASE("first-type brute force") {
  // sum_{k=1}^{3} psi_0(k+2) = -3g + 65/12.
  FirstTypeSpec s{0, {{0, 2, 1}}, 3};
  CHECK(sum_type1_bruteforce(s) ==
        PolyValue(Rational(65, 12)) - Rational(3) * g());
  // Empty sum convention.
  FirstTypeSpec empty{0, {{0, 2, 1}}, 0};
  CHECK(sum_type1_bruteforce(empty).is_zero());
  // sum_{k=1}^{2} k psi_1(k) = 3 z2 - 2.
  FirstTypeSpec s2{1, {{1, 0, 1}}, 2};
  CHECK(sum_type1_bruteforce(s2) == Rational(3) * z2() - PolyValue(2));
}

TEST_CASE("first-type closed forms") {
  CHECK(sum_type1_closed("A2", 3, 2) ==
        PolyValue(Rational(65, 12)) - Rational(3) * g());
  // A14 at (1,0) equals the one-term brute force psi_1(1) = z2.
  CHECK(sum_type1_closed("A14", 1, 0) == z2());
  FirstTypeSpec a10{0, {{0, 1, 3}}, 2};
  CHECK(sum_type1_closed("A10", 2, 1) == sum_type1_bruteforce(a10));
  CHECK_THROWS(sum_type1_closed("A31", 2, 1));
}

TEST_CASE("first-type semi forms") {
  // A26 reduces to A6 at a = 0.
  for (long n = 1; n <= 8; ++n) {
    CHECK(sum_type1_semi("A26", n, 0) == sum_type1_closed("A6", n, 0));
    CHECK(sum_type1_semi("A27", n, 0) == sum_type1_closed("A7", n, 0));
    CHECK(sum_type1_semi("A28", n, 0) == sum_type1_closed("A8", n, 0));
    CHECK(sum_type1_semi("A29", n, 0) == sum_type1_closed("A9", n, 0));
  }
  FirstTypeSpec a26{0, {{0, 2, 1}, {0, 0, 1}}, 4};
  CHECK(sum_type1_semi("A26", 4, 2) == sum_type1_bruteforce(a26));
  FirstTypeSpec a29{3, {{0, 1, 1}, {0, 0, 1}}, 3};
  CHECK(sum_type1_semi("A29", 3, 1) == sum_type1_bruteforce(a29));
}

TEST_CASE("second-type brute force") {
  CHECK(sum_type2_bruteforce({2, 3, SecondTypeFn::kOne, 0}) == PolyValue(3));
  CHECK(sum_type2_bruteforce({2, 3, SecondTypeFn::kInvK, 0}) ==
        PolyValue(Rational(5, 2)));
  CHECK(sum_type2_bruteforce({1, 1, SecondTypeFn::kOne, 0}) == PolyValue(1));
}

TEST_CASE("second-type closed forms") {
  CHECK(sum_type2_closed("B2", 2, 3) == PolyValue(3));
  CHECK(sum_type2_closed("B3", 2, 3) == PolyValue(Rational(5, 2)));
  CHECK(sum_type2_closed("B5", 3, 4) ==
        sum_type2_bruteforce({3, 4, SecondTypeFn::kPsi0KOverK, 0}));
}

TEST_CASE("second-type semi forms") {
  CHECK(sum_type2_semi("B7", 2, 4, 1) ==
        sum_type2_bruteforce({2, 4, SecondTypeFn::kInvKPlusA, 1}));
  CHECK(sum_type2_semi("B8", 3, 5) ==
        sum_type2_bruteforce({3, 5, SecondTypeFn::kInvK2, 0}));
  CHECK(sum_type2_semi("B11", 2, 6) ==
        sum_type2_bruteforce({2, 6, SecondTypeFn::kPsi1K, 0}));
  CHECK_THROWS(sum_type2_semi("B8", 3, 3));
}

TEST_CASE("milgram identities") {
  auto [l1, r1] = milgram_identities(MilgramVariant::kPair, 3, 1, 0);
  CHECK(l1 == r1);
  auto [l2, r2] = milgram_identities(MilgramVariant::kLimit, 4, 2);
  CHECK(l2 == r2);
  auto [l3, r3] = milgram_identities(MilgramVariant::kSquaredPair, 5, 0);
  CHECK(l3 == r3);
  CHECK_THROWS(milgram_identities(MilgramVariant::kPair, 3, 2, 2));
}

TEST_CASE("verify engine") {
  IdentityReport r = verify_identity("A2", 25, 8);
  CHECK(r.fail == 0);
  CHECK(r.pass == 25 * 9);
  CHECK(!r.counterexample.has_value());

  IdentityReport rb = verify_identity("B2", 25, 0);
  CHECK(rb.fail == 0);
  CHECK(rb.pass == 25 * 26 / 2);

  // Mutation test: a corrupted right-hand side must produce a concrete
  // counterexample.
  std::vector<std::pair<long, long>> grid;
  for (long n = 1; n <= 5; ++n) grid.emplace_back(n, 0L);
  IdentityReport bad = verify_grid("A2-corrupt", "n in 1..5", grid, [](long n, long a) {
    FirstTypeSpec s{0, {{0, a, 1}}, n};
    PolyValue lhs = sum_type1_bruteforce(s);
    PolyValue rhs = sum_type1_closed("A2", n, a) + PolyValue(Rational(1, 7));
    return std::make_pair(lhs, rhs);
  });
  CHECK(bad.fail == 5);
  CHECK(bad.counterexample.has_value());
  CHECK(bad.pass + bad.fail == 5);
}

TEST_CASE("all identities on a reduced grid") {
  for (const std::string& id : identity_ids()) {
    IdentityReport r = verify_identity(id, 10, 4);
    CAPTURE(id);
    CHECK(r.fail == 0);
    if (r.counterexample) {
      MESSAGE("counterexample for ", id, " at ", r.counterexample->params, ": ",
              r.counterexample->lhs, " vs ", r.counterexample->rhs);
    }
  }
}

TEST_CASE("derivative relation between A6..A9 and A22..A25") {
  const double h = 1e-5;
  for (int idx = 0; idx < 4; ++idx) {
    for (long n : {2L, 5L}) {
      for (long a : {1L, 3L}) {
        double deriv = (a6to9_float(6 + idx, n, a + h) - a6to9_float(6 + idx, n, a - h)) /
                       (2 * h);
        std::string id = "A" + std::to_string(22 + idx);
        double value = 2.0 * sum_type1_closed(id, n, a).to_double();
        CHECK(std::abs(deriv - value) <= 1e-5 * (1.0 + std::abs(value)));
      }
    }
  }
}

TEST_CASE("A2 and A14 hold for real a") {
  // The exact route only covers integer shifts; spot-check two
  // representatives at real a in double precision.
  for (double a : {1.5, 2.75}) {
    for (long n : {3L, 8L}) {
      double lhs0 = 0.0, lhs1 = 0.0;
      for (long k = 1; k <= n; ++k) {
        lhs0 += psi_real(0, k + a);
        lhs1 += psi_real(1, k + a);
      }
      double rhs0 = (a + n) * psi_real(0, a + n + 1) - a * psi_real(0, a + 1) - n;
      double rhs14 = (a + n) * psi_real(1, a + n + 1) - a * psi_real(1, a + 1) +
                     psi_real(0, a + n + 1) - psi_real(0, a + 1);
      CHECK(std::abs(lhs0 - rhs0) <= 1e-10 * (1.0 + std::abs(rhs0)));
      CHECK(std::abs(lhs1 - rhs14) <= 1e-10 * (1.0 + std::abs(rhs14)));
    }
  }
}

TEST_CASE("B3 and B8 hold for real n") {
  for (long m : {2L, 3L, 4L}) {
    double n = m + 2.5;
    auto kernel = [&](long k) {
      return std::exp(std::lgamma(n - k + 1) - std::lgamma(static_cast<double>(m - k + 1)));
    };
    // B3: direct sum against n!/m! (psi0(n+1) - psi0(n-m+1)).
    double direct = 0.0;
    for (long k = 1; k <= m; ++k) direct += kernel(k) / k;
    double pref = std::exp(std::lgamma(n + 1) - std::lgamma(static_cast<double>(m + 1)));
    double rhs = pref * (psi_real(0, n + 1) - psi_real(0, n - m + 1));
    CHECK(std::abs(direct - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));

    // B8: direct sum against the semi closed form with real-argument psi.
    double direct2 = 0.0;
    for (long k = 1; k <= m; ++k) direct2 += kernel(k) / (k * k);
    double s1 = 0.0;
    for (long k = 1; k <= m; ++k) s1 += psi_real(0, k + n - m) / k;
    double pn0 = psi_real(0, n + 1), pq0 = psi_real(0, n - m + 1);
    double tail = 0.5 * (psi_real(1, n - m + 1) - psi_real(1, n + 1) + pq0 * pq0 -
                         pn0 * pn0) +
                  psi_real(0, n - m) * (pn0 - psi_real(0, static_cast<double>(m + 1)) -
                                        pq0 + psi_real(0, 1.0));
    double rhs2 = pref * (s1 + tail);
    CHECK(std::abs(direct2 - rhs2) <= 1e-9 * (1.0 + std::abs(rhs2)));
  }
}
