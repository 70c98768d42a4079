// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "periodeq/period.hpp"
#include "periodeq/resultant.hpp"
#include "periodeq/scanner.hpp"

using namespace periodeq;

namespace {

ScanSpec bench_spec(int workers) {
  ScanSpec spec;
  spec.e_min = 4;
  spec.e_max = 40;
  spec.p_bound = 2000;
  spec.workers = workers;
  return spec;
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::vector<mpz_class> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

void BM_ScanSerial(benchmark::State& state) {
  const ScanSpec spec = bench_spec(1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(spec));
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const ScanSpec spec = bench_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan(spec));
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ResultantSubresultant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntPoly a = random_poly(rng, n);
  const IntPoly b = random_poly(rng, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_subresultant(a, b));
}
BENCHMARK(BM_ResultantSubresultant)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ResultantModular(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntPoly a = random_poly(rng, n);
  const IntPoly b = random_poly(rng, n - 1);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(resultant_modular(a, b, threads));
}
BENCHMARK(BM_ResultantModular)
    ->ArgsProduct({{16, 64, 128}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_PeriodExact(benchmark::State& state) {
  const PrimeContext ctx = make_context(static_cast<std::uint64_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(period_polynomial_exact(ctx));
}
BENCHMARK(BM_PeriodExact)->Arg(30)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_PeriodModular(benchmark::State& state) {
  const PrimeContext ctx = make_context(static_cast<std::uint64_t>(state.range(0)), 2);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(period_polynomial_modular(ctx, threads));
}
BENCHMARK(BM_PeriodModular)->ArgsProduct({{30, 96}, {1, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
