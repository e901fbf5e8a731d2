#include <benchmark/benchmark.h>

#include "leibniz/cohomology.hpp"
#include "leibniz/theorems.hpp"

using namespace leibniz;

namespace {

Bimodule adjoint_of_random(std::uint32_t p, std::size_t dim, std::uint64_t seed) {
    RandomAlgebraSpec spec;
    spec.field = FieldSpec::prime_field(p);
    spec.dim = dim;
    spec.cls = RandomAlgebraSpec::Class::Nilpotent;
    spec.seed = seed;
    auto a = std::make_shared<const LeibnizAlgebra>(random_algebra(spec));
    return adjoint_bimodule(a);
}

void BM_CoboundaryAssembly(benchmark::State& state) {
    const Bimodule m = adjoint_of_random(5, 3, 7);
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(m, degree));
}
BENCHMARK(BM_CoboundaryAssembly)->Arg(3)->Arg(4)->Arg(5);

void BM_HlDims(benchmark::State& state) {
    const Bimodule m = adjoint_of_random(5, 3, 7);
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hl_dims(m, degree));
}
BENCHMARK(BM_HlDims)->Arg(3)->Arg(4);

void BM_TrivialDegreeSix(benchmark::State& state) {
    // the degree budget of the acceptance gate: the 2-dim nilpotent model
    auto a = std::make_shared<const LeibnizAlgebra>(
        fixtures::two_dim_nilpotent(FieldSpec::rationals()));
    const Bimodule t = trivial_bimodule(a, 1);
    for (auto _ : state) benchmark::DoNotOptimize(hl_dims(t, 6));
}
BENCHMARK(BM_TrivialDegreeSix);

void BM_CartanVerification(benchmark::State& state) {
    const Bimodule m = adjoint_of_random(3, 3, 11);
    Vec x = vec_zero(m.field(), 3);
    x[0] = Scalar::one(m.field());
    x[2] = Scalar::one(m.field());
    for (auto _ : state) benchmark::DoNotOptimize(verify_cartan(m, x, 3));
}
BENCHMARK(BM_CartanVerification);

void BM_TheoremSweepUnit(benchmark::State& state) {
    SweepOptions opts;
    opts.instances = 10;
    opts.seed = 9;
    opts.n_max = 3;
    for (auto _ : state) benchmark::DoNotOptimize(sweep_theorem(TheoremId::VanNilp, opts));
}
BENCHMARK(BM_TheoremSweepUnit);

}  // namespace

BENCHMARK_MAIN();
