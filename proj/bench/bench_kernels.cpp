// Serial reference vs OpenMP kernels: vertex enumeration and parameter sweeps.

#include <random>

#include <benchmark/benchmark.h>

#include "gridmix/analysis.hpp"
#include "gridmix/model.hpp"

using namespace gridmix;

namespace {

// Four variables and eight random rows: C(12, 4) = 495 candidate subsets.
lp::LinearProgram dense_program(std::size_t rows) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(0.1, 10.0), rhs(10.0, 100.0);
    auto p = lp::LinearProgram::with_variables({"a", "b", "c", "d"});
    p.objective = {1.0, 2.0, 3.0, 4.0};
    for (std::size_t i = 0; i < rows; ++i)
        p.add({coef(rng), coef(rng), coef(rng), coef(rng)}, i % 2 ? lp::Relation::LessEqual : lp::Relation::GreaterEqual,
              rhs(rng) * (i % 2 ? 4.0 : 1.0), "r" + std::to_string(i));
    return p;
}

void BM_VerticesSerial(benchmark::State& state) {
    const auto p = dense_program(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analysis::enumerate_vertices_serial(p));
}

void BM_VerticesParallel(benchmark::State& state) {
    const auto p = dense_program(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analysis::enumerate_vertices(p));
}

void BM_SweepSerial(benchmark::State& state) {
    const auto s = *model::find_builtin("m4_nuclear");
    const auto values = analysis::linspace(2.06e8, 5.06e10, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analysis::sweep_serial(s, "land_ft2", values));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto s = *model::find_builtin("m4_nuclear");
    const auto values = analysis::linspace(2.06e8, 5.06e10, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analysis::sweep(s, "land_ft2", values));
}

}  // namespace

BENCHMARK(BM_VerticesSerial)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_VerticesParallel)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(200);
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(200);

BENCHMARK_MAIN();
