#include "zb/appell.hpp"
#include "zb/approx.hpp"
#include "zb/hypergeometric.hpp"

#include <benchmark/benchmark.h>

namespace {

const zb::AppellParams kF1{0.5, 0.5, 0.5, 1.5};
const zb::Params kHalf{0.5, 0.5, 0.5};

void BM_F1DoubleSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zb::f1_double_series(kF1, 0.85, 0.9));
}
BENCHMARK(BM_F1DoubleSeries);

void BM_F1SingleSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zb::f1_single_series(kF1, 0.85, 0.9));
}
BENCHMARK(BM_F1SingleSeries);

void BM_F1Integral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zb::f1_integral(0.5, 0.5, 0.5, 0.85, 0.9));
}
BENCHMARK(BM_F1Integral);

void BM_GApprox(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zb::g_approx(kHalf, 0.9, 0.99));
}
BENCHMARK(BM_GApprox);

void BM_Tail(benchmark::State& state) {
    const double w = static_cast<double>(state.range(0)) / 1000.0;
    for (auto _ : state) benchmark::DoNotOptimize(zb::f2f1_tail(0.3, 1.2, w));
}
BENCHMARK(BM_Tail)->Arg(500)->Arg(900)->Arg(999);

void BM_ApproxReport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zb::approx_report(kHalf, 0.99, 0.95));
}
BENCHMARK(BM_ApproxReport);

}  // namespace

BENCHMARK_MAIN();
