#include <benchmark/benchmark.h>

#include <random>

#include "leibniz/matrix.hpp"

using namespace leibniz;

namespace {

ExactMatrix random_sparse(const FieldSpec& f, std::size_t rows, std::size_t cols, int density,
                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ExactMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng() % 100 >= static_cast<unsigned>(density)) continue;
            const Scalar s = f.is_prime_field()
                                 ? Scalar::of(f, static_cast<long long>(rng() % f.prime()))
                                 : Scalar::of(f, static_cast<long long>(rng() % 19) - 9);
            if (!s.is_zero()) m.set(i, j, s);
        }
    return m;
}

void BM_RankPrime(benchmark::State& state) {
    const FieldSpec f = FieldSpec::prime_field(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_sparse(f, 3 * n, n, 10, 42);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(64)->Arg(243)->Arg(729);

void BM_RankRational(benchmark::State& state) {
    const FieldSpec f = FieldSpec::rationals();
    const auto n = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_sparse(f, 2 * n, n, 10, 43);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_RankRational)->Arg(32)->Arg(64)->Arg(128);

void BM_RankFractionFree(benchmark::State& state) {
    const FieldSpec f = FieldSpec::rationals();
    const auto n = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_sparse(f, n, n, 25, 44);
    for (auto _ : state) benchmark::DoNotOptimize(rank_fraction_free(m));
}
BENCHMARK(BM_RankFractionFree)->Arg(16)->Arg(32)->Arg(64);

void BM_KernelImagePrime(benchmark::State& state) {
    const FieldSpec f = FieldSpec::prime_field(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_sparse(f, 3 * n, n, 10, 45);
    for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_image(m));
}
BENCHMARK(BM_KernelImagePrime)->Arg(64)->Arg(243);

}  // namespace

BENCHMARK_MAIN();
