// Serial vs OpenMP timings for the grid kernels.
#include <benchmark/benchmark.h>

#include "qmd/grid.hpp"

namespace {

using namespace qmd;

constexpr ArithMode F = ArithMode::Float;

AnalyticField bench_field() {
    auto O = ComplexScalar::zero(F), I = ComplexScalar::one(F);
    return AnalyticField(
        F, {PlaneWaveTerm{{I, ComplexScalar::floating(0.5, 1.0), O, I},
                          {ComplexScalar::floating(1.0), O, ComplexScalar::floating(2.0)}},
            PlaneWaveTerm{{O, I, I, O},
                          {O, ComplexScalar::floating(-1.0), ComplexScalar::floating(0.5)}}});
}

const GridBox kBox{{-1.0, -1.0, -1.0}, {2.0, 2.0, 2.0}};
constexpr double kH = 0.03125;  // 65^3 nodes

Exec exec_of(const benchmark::State& state) {
    return state.range(0) ? Exec::Parallel : Exec::Serial;
}

void BM_sample(benchmark::State& state) {
    auto f = bench_field();
    for (auto _ : state) {
        auto g = sample(f, kBox, kH, exec_of(state));
        benchmark::DoNotOptimize(g.data());
    }
}

void BM_fd_apply(benchmark::State& state) {
    auto g = sample(bench_field(), kBox, kH);
    auto d = moisil_theodoresco(F);
    for (auto _ : state) {
        auto r = fd_apply(d, g, exec_of(state));
        benchmark::DoNotOptimize(r.data());
    }
}

void BM_residual_max(benchmark::State& state) {
    auto g = sample(bench_field(), kBox, kH);
    for (auto _ : state) {
        double r = residual_max(g, exec_of(state));
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_sample)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fd_apply)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_residual_max)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
