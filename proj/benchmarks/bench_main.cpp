#include <benchmark/benchmark.h>

#include "qgue/exactq.hpp"
#include "qgue/genus.hpp"
#include "qgue/gue.hpp"
#include "qgue/symschur.hpp"
#include "qgue/verify.hpp"
#include "qgue/xpoly.hpp"

namespace {

using namespace qgue;

void BM_QBinomialSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Scalar sum;
    for (int k = 0; k <= n; ++k) sum += q_binomial(n, k, Base::squared) / q_factorial(k);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_QBinomialSum)->Arg(8)->Arg(16)->Arg(24);

void BM_Duality(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Scalar acc;
    for (int k = 0; k <= d; ++k) {
      Scalar term = series_coefficient(k, Series::e) * series_coefficient(d - k, Series::E);
      if ((d - k) % 2 == 1) term = -term;
      acc += term;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Duality)->Arg(10)->Arg(20)->Arg(30);

void BM_Hermite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite(n));
}
BENCHMARK(BM_Hermite)->Arg(5)->Arg(10)->Arg(15);

void BM_IntegrateSchurFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition kappa = Partition::parse("3,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(integrate_schur(kappa, n, Method::fast));
}
BENCHMARK(BM_IntegrateSchurFast)->DenseRange(3, 5);

void BM_IntegrateSchurOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition kappa = Partition::parse("3,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(integrate_schur(kappa, n, Method::oracle));
}
BENCHMARK(BM_IntegrateSchurOracle)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_GenusTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genus_table(m));
}
BENCHMARK(BM_GenusTable)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyDeterminantalSuite(benchmark::State& state) {
  GridBounds bounds;
  bounds.max_weight = 4;
  bounds.max_vars = 3;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(Suite::theorem3, bounds, threads));
}
BENCHMARK(BM_VerifyDeterminantalSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
