#include <benchmark/benchmark.h>

#include "rsk/classical_rsk.hpp"
#include "rsk/corpus.hpp"
#include "rsk/hook_series.hpp"
#include "rsk/octahedron.hpp"
#include "rsk/toggle_rsk.hpp"

namespace {

rsk::NTableau square_input(int n) {
    rsk::Rng rng(static_cast<std::uint64_t>(n) * 7919);
    return rsk::random_square(rng, n, 6);
}

void BM_ToggleRsk(benchmark::State& state) {
    rsk::NTableau a = square_input(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rsk::toggle_rsk(a));
}
BENCHMARK(BM_ToggleRsk)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ToggleRskInverse(benchmark::State& state) {
    rsk::NTableau image = rsk::toggle_rsk(square_input(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(rsk::toggle_rsk_inverse(image));
}
BENCHMARK(BM_ToggleRskInverse)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ClassicalRsk(benchmark::State& state) {
    rsk::NTableau a = square_input(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rsk::classical_hat(a));
}
BENCHMARK(BM_ClassicalRsk)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildPyramid(benchmark::State& state) {
    rsk::NTableau a = square_input(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        rsk::PyramidArray u = rsk::build_u(a);
        benchmark::DoNotOptimize(rsk::build_utilde(rsk::build_ubar(u), a));
    }
}
BENCHMARK(BM_BuildPyramid)->Arg(4)->Arg(8)->Arg(16);

void BM_RppSeries(benchmark::State& state) {
    rsk::Partition shape({5, 4, 3, 2, 1});
    std::size_t degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rsk::rpp_gf(shape, degree));
}
BENCHMARK(BM_RppSeries)->Arg(64)->Arg(256)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
