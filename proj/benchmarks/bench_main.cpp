#include <benchmark/benchmark.h>

#include "vnskew/cumulants.hpp"
#include "vnskew/ensemble.hpp"
#include "vnskew/identities.hpp"
#include "vnskew/integrals.hpp"
#include "vnskew/laguerre.hpp"
#include "vnskew/polygamma.hpp"
#include "vnskew/schrodinger.hpp"

namespace {

using namespace vnskew;

void BM_PsiInt(benchmark::State& state) {
  long l = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_int(0, l));
    benchmark::DoNotOptimize(psi_int(2, l));
  }
}
BENCHMARK(BM_PsiInt)->Arg(16)->Arg(128)->Arg(400);

void BM_Kappa3Closed(benchmark::State& state) {
  Dims d(state.range(0), 2 * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kappa3(d));
}
BENCHMARK(BM_Kappa3Closed)->Arg(4)->Arg(16);

void BM_Kappa3TFromIntegrals(benchmark::State& state) {
  Dims d(state.range(0), state.range(0) + 2);
  for (auto _ : state) benchmark::DoNotOptimize(kappa3T_from_integrals(d));
}
BENCHMARK(BM_Kappa3TFromIntegrals)->Arg(4)->Arg(10)->Arg(20);

void BM_ClosedIC(benchmark::State& state) {
  Dims d(state.range(0), state.range(0) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(closed_IC(d));
}
BENCHMARK(BM_ClosedIC)->Arg(4)->Arg(12);

void BM_LimitSchrodingerLog(benchmark::State& state) {
  long m = state.range(0), n = m + 2;
  LogIntegralParams p{n - m + 3, n - m + 1, n - m + 1, m - 1, m - 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(limit_schrodinger_log(p, 3));
}
BENCHMARK(BM_LimitSchrodingerLog)->Arg(3)->Arg(6)->Arg(10);

void BM_WishartSample(benchmark::State& state) {
  Dims d(state.range(0), 2 * state.range(0));
  SplitRng rng(1234, 0);
  for (auto _ : state) {
    ComplexMatrix x = sample_ginibre(d, rng);
    benchmark::DoNotOptimize(entropy_S(fixed_trace_eigenvalues(x)));
  }
}
BENCHMARK(BM_WishartSample)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_GaussLaguerreEval(benchmark::State& state) {
  int nodes = static_cast<int>(state.range(0));
  gauss_laguerre_rule(nodes);  // build outside the timed loop
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gauss_laguerre(nodes, [](double x) { return std::exp(-x) * x * x; }));
  }
}
BENCHMARK(BM_GaussLaguerreEval)->Arg(64)->Arg(256);

void BM_IdentitySweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_identity("A13", state.range(0), 2));
  }
}
BENCHMARK(BM_IdentitySweep)->Arg(5)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
