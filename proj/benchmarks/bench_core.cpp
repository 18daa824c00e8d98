#include <benchmark/benchmark.h>

#include <numbers>

#include "lame/greens.hpp"
#include "lame/hauptmodul.hpp"
#include "lame/spectral.hpp"
#include "lame/sturm.hpp"

using namespace lame;

namespace {

const cx hex = std::polar(1.0, std::numbers::pi / 3.0);

void BM_LatticeConstruct(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(Lattice(1.0, cx(0.3, 1.1)));
}
BENCHMARK(BM_LatticeConstruct);

void BM_WpZetaSigma(benchmark::State& s)
{
    const Lattice L(1.0, cx(0.3, 1.1));
    cx z(0.17, 0.41);
    for (auto _ : s) {
        benchmark::DoNotOptimize(L.all(z));
        benchmark::DoNotOptimize(L.log_sigma(z));
        z += 1e-9;
    }
}
BENCHMARK(BM_WpZetaSigma);

void BM_CriticalPoints(benchmark::State& s)
{
    const Lattice L(1.0, hex);
    for (auto _ : s) benchmark::DoNotOptimize(critical_points(L, static_cast<int>(s.range(0))));
}
BENCHMARK(BM_CriticalPoints)->Arg(32)->Arg(64)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EllPoly(benchmark::State& s)
{
    const Lattice L(1.0, cx(0.3, 1.1));
    for (auto _ : s) benchmark::DoNotOptimize(ell_poly(static_cast<int>(s.range(0)), L));
}
BENCHMARK(BM_EllPoly)->DenseRange(1, 6);

void BM_Fiber(benchmark::State& s)
{
    const Lattice L(1.0, cx(0.3, 1.1));
    for (auto _ : s) benchmark::DoNotOptimize(fiber(static_cast<int>(s.range(0)), cx(2.0, 1.0), L));
}
BENCHMARK(BM_Fiber)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_CountRoots(benchmark::State& s)
{
    const Lattice L(1.0, cx(0.0, 1.3));
    const CxPoly p = ell_poly(static_cast<int>(s.range(0)), L);
    for (auto _ : s) benchmark::DoNotOptimize(count_roots(p));
}
BENCHMARK(BM_CountRoots)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_HauptCoeffs(benchmark::State& s)
{
    for (auto _ : s) benchmark::DoNotOptimize(a_coeffs(cx(0.1, 1.05), static_cast<int>(s.range(0))));
}
BENCHMARK(BM_HauptCoeffs)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
