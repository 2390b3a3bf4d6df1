#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vnskew/cumulants.hpp"
#include "vnskew/ensemble.hpp"
#include "vnskew/polygamma.hpp"
#include "vnskew/quadrature.hpp"

using namespace vnskew;

TEST_CASE("rng determinism and moments") {
  SplitRng a(42, 0), b(42, 0);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  SplitRng c(42, 1);
  double mean = 0.0;
  const long N = 1000000;
  for (long i = 0; i < N; ++i) mean += c.normal();
  mean /= N;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("sample_ginibre") {
  Dims d(2, 4);
  SplitRng r1(7, 3), r2(7, 3);
  ComplexMatrix x1 = sample_ginibre(d, r1);
  ComplexMatrix x2 = sample_ginibre(d, r2);
  for (std::size_t i = 0; i < x1.data.size(); ++i) CHECK(x1.data[i] == x2.data[i]);

  // Entry mean -> 0 within 4 sigma at 1e6 entries (per part, sd = 1/sqrt 2).
  SplitRng r3(11, 0);
  const long mats = 1000000 / 8;
  double mean = 0.0;
  double trace_min = 1e300;
  for (long i = 0; i < mats; ++i) {
    ComplexMatrix x = sample_ginibre(d, r3);
    double tr = 0.0;
    for (const auto& e : x.data) {
      mean += e.real() + e.imag();
      tr += std::norm(e);
    }
    trace_min = std::min(trace_min, tr);
  }
  double entries = static_cast<double>(mats) * 8 * 2;
  mean /= entries;
  CHECK(std::abs(mean) < 4.0 * 0.7071067811865476 / std::sqrt(entries));
  CHECK(trace_min > 0.0);
}

TEST_CASE("eigen solver against analytic spectra") {
  // X chosen so X X^dagger = [[3, 1-i], [1+i, 1]] (+) diag(7, 1/2); the 2x2
  // block has eigenvalues 2 +- sqrt(3).
  ComplexMatrix x(4, 4);
  x.at(0, 0) = 1.0;
  x.at(0, 1) = {1.0, -1.0};
  x.at(1, 1) = 1.0;
  x.at(2, 2) = std::sqrt(7.0);
  x.at(3, 3) = std::sqrt(0.5);
  EigenSpectrum spec = wishart_eigenvalues(x);
  REQUIRE(spec.values.size() == 4);
  double s3 = std::sqrt(3.0);
  CHECK(spec.values[0] == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(spec.values[1] == doctest::Approx(2.0 + s3).epsilon(1e-12));
  CHECK(spec.values[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spec.values[3] == doctest::Approx(2.0 - s3).epsilon(1e-12));
}

TEST_CASE("fixed-trace spectra") {
  SplitRng rng(3, 0);
  // m = 1: the spectrum is exactly {1}.
  ComplexMatrix x1 = sample_ginibre(Dims(1, 6), rng);
  EigenSpectrum s1 = fixed_trace_eigenvalues(x1);
  REQUIRE(s1.values.size() == 1);
  CHECK(s1.values[0] == doctest::Approx(1.0).epsilon(1e-15));

  for (int rep = 0; rep < 50; ++rep) {
    ComplexMatrix x = sample_ginibre(Dims(4, 8), rng);
    EigenSpectrum s = fixed_trace_eigenvalues(x);
    double sum = 0.0;
    for (double v : s.values) {
      sum += v;
      CHECK(v >= 0.0);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    // Sorted non-increasing.
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
      CHECK(s.values[i] >= s.values[i + 1]);
    }
  }
}

TEST_CASE("entropy values") {
  EigenSpectrum one{{1.0}, true};
  CHECK(entropy_S(one) == 0.0);
  EigenSpectrum uniform{{0.25, 0.25, 0.25, 0.25}, true};
  CHECK(entropy_S(uniform) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  EigenSpectrum half{{0.5, 0.5}, true};
  CHECK(entropy_S(half) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS(entropy_S(EigenSpectrum{{1.0}, false}));
}

TEST_CASE("induced entropy and the S/T relation") {
  EigenSpectrum single{{1.0}, false};
  CHECK(induced_T(single) == 0.0);
  SplitRng rng(9, 0);
  for (int rep = 0; rep < 50; ++rep) {
    ComplexMatrix x = sample_ginibre(Dims(3, 5), rng);
    EigenSpectrum theta = wishart_eigenvalues(x);
    double r = 0.0;
    for (double v : theta.values) r += v;
    double t = induced_T(theta);
    double s = entropy_S(fixed_trace_eigenvalues(x));
    CHECK(std::abs(s - (r * std::log(r) - t) / r) <= 1e-12);
  }
}

TEST_CASE("E[T] at (1,3) against the closed form") {
  const long N = 100000;
  SampleStats stats;
  const long B = stats.batch_count();
  for (long b = 0; b < B; ++b) {
    SplitRng rng(123, b);
    for (long i = 0; i < N / B; ++i) {
      ComplexMatrix x = sample_ginibre(Dims(1, 3), rng);
      stats.add(b, induced_T(wishart_eigenvalues(x)));
    }
  }
  CumulantEstimates est = empirical_cumulants(stats);
  double expect = t_cumulants(Dims(1, 3)).kappa1T.to_double();
  CHECK(std::abs(est.k1 - expect) < 4.0 * est.se1);
}

TEST_CASE("run_batch basics") {
  // m = 1: S is identically zero.
  SampleStats zero = run_batch(Dims(1, 5), 500, 1);
  CHECK(zero.count() == 500);
  CHECK(zero.min_value() == 0.0);
  CHECK(zero.max_value() == 0.0);

  // (2,2): mean within 4 stderr of 1/3.
  SampleStats s22 = run_batch(Dims(2, 2), 200000, 42);
  CumulantEstimates est = empirical_cumulants(s22);
  CHECK(std::abs(est.k1 - 1.0 / 3.0) < 4.0 * est.se1);
  double k2 = kappa2(Dims(2, 2)).to_double();
  CHECK(std::abs(est.k2 - k2) < 4.0 * est.se2);

  // Range invariant: S in [0, ln m].
  CHECK(s22.min_value() >= 0.0);
  CHECK(s22.max_value() <= std::log(2.0));
}

TEST_CASE("run_batch determinism across thread counts") {
  std::vector<double> c1, c4;
  SampleStats a = run_batch(Dims(2, 3), 5000, 7, 1, &c1);
  SampleStats b = run_batch(Dims(2, 3), 5000, 7, 4, &c4);
  CHECK(c1 == c4);
  CHECK(a.count() == b.count());
  for (long i = 0; i < a.batch_count(); ++i) {
    CHECK(a.batches()[i].s1 == b.batches()[i].s1);
    CHECK(a.batches()[i].s3 == b.batches()[i].s3);
  }
}

TEST_CASE("batch-aligned merge equals single stream") {
  std::vector<double> samples;
  SampleStats whole = run_batch(Dims(2, 4), 2000, 99, 1, &samples);
  // Rebuild by splitting at a batch boundary: batches 0..49 and 50..99.
  SampleStats part1, part2;
  long idx = 0;
  for (long b = 0; b < 100; ++b) {
    long size = 2000 / 100;
    for (long i = 0; i < size; ++i, ++idx) {
      (b < 50 ? part1 : part2).add(b, samples[idx]);
    }
  }
  part1.merge(part2);
  CHECK(part1.count() == whole.count());
  for (long b = 0; b < 100; ++b) {
    CHECK(part1.batches()[b].s1 == whole.batches()[b].s1);
    CHECK(part1.batches()[b].s2 == whole.batches()[b].s2);
    CHECK(part1.batches()[b].s4 == whole.batches()[b].s4);
  }
}

TEST_CASE("empirical cumulants") {
  // Constant stream.
  SampleStats constant;
  for (long b = 0; b < constant.batch_count(); ++b) {
    for (int i = 0; i < 5; ++i) constant.add(b, 2.5);
  }
  CumulantEstimates c = empirical_cumulants(constant);
  CHECK(c.k1 == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(c.k2 == doctest::Approx(0.0));
  CHECK(c.k3 == doctest::Approx(0.0));

  // Standard normal stream: (0, 1, 0) within 5 stderr.
  SampleStats normal;
  const long N = 1000000;
  for (long b = 0; b < normal.batch_count(); ++b) {
    SplitRng rng(2024, b);
    for (long i = 0; i < N / normal.batch_count(); ++i) normal.add(b, rng.normal());
  }
  CumulantEstimates est = empirical_cumulants(normal);
  CHECK(std::abs(est.k1 - 0.0) < 5.0 * est.se1);
  CHECK(std::abs(est.k2 - 1.0) < 5.0 * est.se2);
  CHECK(std::abs(est.k3 - 0.0) < 5.0 * est.se3);

  SampleStats tiny;
  tiny.add(0, 1.0);
  CHECK_THROWS(empirical_cumulants(tiny));
}

TEST_CASE("simplex quadrature normalization") {
  for (long n : {2L, 3L, 7L}) {
    double mass = simplex_quadrature_m2(n, [](double) { return 1.0; }, 1e-12);
    CHECK(std::abs(mass - 1.0) < 1e-12);
  }
}
