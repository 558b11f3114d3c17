#include <benchmark/benchmark.h>

#include <cmath>

#include "logitprice/experiments.hpp"
#include "logitprice/lambert_w.hpp"
#include "logitprice/oracle.hpp"
#include "logitprice/solver.hpp"

namespace {

using namespace logitprice;

const LogitParams kBase = validate_params(1000.0, -6.0, 0.3);

void BM_Solve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve(kBase));
}
BENCHMARK(BM_Solve);

void BM_OptimalPrice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_price(kBase));
}
BENCHMARK(BM_OptimalPrice);

void BM_W0(benchmark::State& state) {
  const double x = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(w0(x));
}
BENCHMARK(BM_W0)->DenseRange(-6, 6, 3);

void BM_W0NearBranch(benchmark::State& state) {
  const double x = -std::exp(-1.0) + 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(w0(x));
}
BENCHMARK(BM_W0NearBranch);

void BM_W0OfExp(benchmark::State& state) {
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(w0_of_exp(y));
}
BENCHMARK(BM_W0OfExp)->Arg(-1)->Arg(5)->Arg(100)->Arg(700);

void BM_GoldenSection(benchmark::State& state) {
  const double hi = 3.0 * inflection_price(kBase);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        golden_section_max([](double p) { return revenue(kBase, p); }, 0.0, hi, 1e-10));
  }
}
BENCHMARK(BM_GoldenSection);

void BM_UnimodalityScan(benchmark::State& state) {
  const double hi = 3.0 * inflection_price(kBase);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unimodality_scan(kBase, kVerifyScanPoints, hi));
  }
}
BENCHMARK(BM_UnimodalityScan)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify(kBase));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<double>(state.range(0));
  const auto alphas = RangeSpec::stepped(-12.0, -2.5, 9.5 / (n - 1));
  const auto thetas = RangeSpec::stepped(0.1, 5.0, 4.9 / (n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(alphas, thetas, 1000.0));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
