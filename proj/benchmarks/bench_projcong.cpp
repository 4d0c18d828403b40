#include <benchmark/benchmark.h>

#include <memory>

#include "projcong/congruence.hpp"
#include "projcong/fixtures.hpp"
#include "projcong/quartic.hpp"
#include "projcong/radon.hpp"
#include "projcong/rng.hpp"
#include "projcong/sphere_analysis.hpp"

using namespace projcong;

namespace {

PolytopeBody bench_polytope(int vertices) {
    Rng rng(7);
    return random_polytope(rng, vertices);
}

}  // namespace

static void BM_PolytopeSupport(benchmark::State& state) {
    const PolytopeBody k = bench_polytope(static_cast<int>(state.range(0)));
    Rng rng(1);
    const UnitVector3 u = rng.unit_vector();
    for (auto _ : state) benchmark::DoNotOptimize(k.support(u));
}
BENCHMARK(BM_PolytopeSupport)->Arg(8)->Arg(30)->Arg(120);

static void BM_SeriesSupport(benchmark::State& state) {
    const SupportSeriesBody cw = SupportSeriesBody::constant_width_p3(0.05);
    Rng rng(2);
    const UnitVector3 u = rng.unit_vector();
    for (auto _ : state) benchmark::DoNotOptimize(cw.support(u));
}
BENCHMARK(BM_SeriesSupport);

static void BM_Profile(benchmark::State& state) {
    const PolytopeBody k = bench_polytope(30);
    const GreatCircleFrame frame = frame_for(UnitVector3(0, 0, 1));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(profile(k, frame, n));
}
BENCHMARK(BM_Profile)->Arg(128)->Arg(512);

static void BM_MatchRotations(benchmark::State& state) {
    const auto k = std::make_shared<PolytopeBody>(bench_polytope(30));
    const UnitVector3 pole(0, 0, 1);
    const BodyPtr l = rotated(k, AxisRotation(pole, 0.37));
    const GreatCircleFrame frame = frame_for(pole);
    const int n = static_cast<int>(state.range(0));
    const CircularProfile pa = profile(*k, frame, n);
    const CircularProfile pb = profile(*l, frame, n);
    for (auto _ : state) benchmark::DoNotOptimize(match_rotations(pa, pb, 5e-2));
    state.SetComplexityN(n);
}
BENCHMARK(BM_MatchRotations)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_ClassifyDirection(benchmark::State& state) {
    const auto k = std::make_shared<PolytopeBody>(bench_polytope(30));
    const BodyPtr l = reflect(k);
    Rng rng(3);
    const UnitVector3 pole = rng.unit_vector();
    for (auto _ : state) benchmark::DoNotOptimize(classify_direction(*k, *l, pole));
}
BENCHMARK(BM_ClassifyDirection);

static void BM_DecomposeSphere(benchmark::State& state) {
    const PolytopeBody k = bench_polytope(30);
    const SphereGrid grid = fibonacci_grid(static_cast<std::size_t>(state.range(0)), true);
    DecompositionParams params;
    params.circle_samples = 128;
    for (auto _ : state) benchmark::DoNotOptimize(decompose_sphere(k, k, grid, params));
}
BENCHMARK(BM_DecomposeSphere)->Arg(50)->Arg(203);

static void BM_RadonPole(benchmark::State& state) {
    const SphereGrid grid = fibonacci_grid(50, true);
    const int nquad = static_cast<int>(state.range(0));
    const auto legendre2 = [](const UnitVector3& u) { return u.z() * u.z() - 1.0 / 3.0; };
    for (auto _ : state) benchmark::DoNotOptimize(radon_transform(legendre2, grid, nquad));
}
BENCHMARK(BM_RadonPole)->Arg(512)->Arg(2048);

static void BM_QuarticSolve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_width_tau_system(3.0, 1.25));
}
BENCHMARK(BM_QuarticSolve);

BENCHMARK_MAIN();
