#include <benchmark/benchmark.h>

#include "kstab/datum.hpp"
#include "kstab/functionals.hpp"
#include "kstab/geometry.hpp"
#include "kstab/integration.hpp"
#include "kstab/oracle.hpp"
#include "kstab/random_instances.hpp"
#include "kstab/stability.hpp"

using namespace kstab;

namespace {

HPolytope cube(std::size_t d) {
    std::vector<Halfspace> rows;
    for (std::size_t i = 0; i < d; ++i) {
        Vec e(d, Rat(0));
        e[i] = 1;
        rows.push_back({e, Rat(1)});
        e[i] = -1;
        rows.push_back({e, Rat(1)});
    }
    return HPolytope(d, rows);
}

SphericalDatum blp2() {
    HPolytope p(2, {{Vec{Rat(1), Rat(0)}, Rat(1)},
                    {Vec{Rat(0), Rat(1)}, Rat(1)},
                    {Vec{Rat(-1), Rat(-1)}, Rat(1)},
                    {Vec{Rat(1), Rat(1)}, Rat(1)}});
    return toric_datum(p, "BlpP2");
}

}  // namespace

static void BM_Vertices(benchmark::State& state) {
    const auto p = cube(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vertices(p));
}
BENCHMARK(BM_Vertices)->DenseRange(2, 4);

static void BM_IntegrateMonomial(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const auto p = cube(d);
    Exponents powers(d, 2);
    const auto m = Polynomial::monomial(Rat(1), powers);
    for (auto _ : state) benchmark::DoNotOptimize(integrate_polynomial(p, m));
}
BENCHMARK(BM_IntegrateMonomial)->DenseRange(1, 3);

static void BM_EvaluateRandom(benchmark::State& state) {
    Rng rng(1);
    InstanceOptions opt;
    opt.min_rank = opt.max_rank = static_cast<std::size_t>(state.range(0));
    const auto inst = random_instance(rng, opt);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(inst.datum, inst.tc, inst.weight));
}
BENCHMARK(BM_EvaluateRandom)->DenseRange(1, 3);

static void BM_Check(benchmark::State& state) {
    const auto d = blp2();
    const auto g = WeightFunction::one(2);
    for (auto _ : state) benchmark::DoNotOptimize(check(d, g));
}
BENCHMARK(BM_Check);

static void BM_Hilbert(benchmark::State& state) {
    const auto d = blp2();
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert(d, k));
}
BENCHMARK(BM_Hilbert)->RangeMultiplier(4)->Range(4, 64);
BENCHMARK_MAIN();
