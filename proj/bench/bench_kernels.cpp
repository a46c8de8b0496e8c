// Serial reference vs OpenMP kernels. Set COCIRC_THREADS to pin the worker count.

#include <benchmark/benchmark.h>

#include "cocirc/inequalities.hpp"
#include "cocirc/scanner.hpp"

namespace {

void BM_ScanSerial(benchmark::State& state) {
    const auto spec = cocirc::FamilySpec::two_groups(static_cast<std::size_t>(state.range(0)), 3, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(cocirc::scan_family_serial(spec, cocirc::Alpha(1.0)));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto spec = cocirc::FamilySpec::two_groups(static_cast<std::size_t>(state.range(0)), 3, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(cocirc::scan_family(spec, cocirc::Alpha(1.0)));
}

cocirc::InequalityConfig inequality_config(int samples) {
    cocirc::InequalityConfig cfg;
    cfg.samples = samples;
    cfg.max_vertices = 12;
    return cfg;
}

void BM_InequalitiesSerial(benchmark::State& state) {
    const auto cfg = inequality_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cocirc::run_inequalities_serial(cfg));
}

void BM_InequalitiesParallel(benchmark::State& state) {
    const auto cfg = inequality_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cocirc::run_inequalities(cfg));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InequalitiesSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InequalitiesParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
