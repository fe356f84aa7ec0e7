// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "severi/e8_kernels.hpp"
#include "severi/qseries.hpp"

using namespace severi;

namespace {

void count_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e8::kernels::serial::count_norm(state.range(0)));
}

void count_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e8::kernels::parallel::count_norm(state.range(0)));
    state.counters["threads"] = omp_get_max_threads();
}

void histogram_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e8::kernels::serial::class_histogram(state.range(0)));
}

void histogram_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(e8::kernels::parallel::class_histogram(state.range(0)));
    state.counters["threads"] = omp_get_max_threads();
}

void convolve_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const QSeries a = eisenstein(4, n), b = eisenstein(6, n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_serial(a.coeffs(), b.coeffs(), n));
}

void convolve_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const QSeries a = eisenstein(4, n), b = eisenstein(6, n);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_parallel(a.coeffs(), b.coeffs(), n));
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(count_serial)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(count_parallel)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(histogram_serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(histogram_parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(convolve_serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(convolve_parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
