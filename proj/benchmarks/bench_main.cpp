#include <benchmark/benchmark.h>

#include "superko/categories.hpp"
#include "superko/fredholm.hpp"
#include "superko/random.hpp"

using namespace superko;

static void BM_GrassmannProduct(benchmark::State& state) {
    auto q = static_cast<unsigned>(state.range(0));
    Rng rng(1);
    CG a = random_positive_even(rng, q) + random_odd(rng, q);
    CG b = random_positive_even(rng, q) + random_odd(rng, q);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GrassmannProduct)->DenseRange(2, 8, 2);

static void BM_SebCompose(benchmark::State& state) {
    auto q = static_cast<unsigned>(state.range(0));
    Rng rng(2);
    SebEndo a = random_seb(rng, 2, q), b = random_seb(rng, 2, q);
    for (auto _ : state) benchmark::DoNotOptimize(seb_compose(a, b));
}
BENCHMARK(BM_SebCompose)->Arg(2)->Arg(4)->Arg(6);

static void BM_SabNormalize(benchmark::State& state) {
    Rng rng(3);
    SabWord w;
    for (int i = 0; i < state.range(0); ++i)
        for (const auto& l : to_word(random_sab(rng, 1, 4))) w.push_back(l);
    for (auto _ : state) benchmark::DoNotOptimize(sab_normalize(w, 1, 4));
}
BENCHMARK(BM_SabNormalize)->Arg(2)->Arg(8);

static void BM_AbsQuotient(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(abs_quotient(n));
}
BENCHMARK(BM_AbsQuotient)->Arg(0)->Arg(7)->Arg(24);

static void BM_SeftRelations(benchmark::State& state) {
    Rng rng(4);
    SeftGenerator g = random_seft_generator(rng, 2, static_cast<std::size_t>(state.range(0)));
    std::vector<XySample> samples{random_xy_sample(rng, 3)};
    for (auto _ : state) benchmark::DoNotOptimize(verify_xy_relations(g, samples));
}
BENCHMARK(BM_SeftRelations)->Arg(8)->Arg(16);

static void BM_Pi0(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pi0(n, 8));
}
BENCHMARK(BM_Pi0)->DenseRange(-2, 2)->Unit(benchmark::kMillisecond);

static void BM_SpectralProjection(benchmark::State& state) {
    std::vector<GradedCliffordModule> parts;
    for (int c = 0; c < 10; ++c)
        for (const auto& m : irreducible_graded_modules(0)) parts.push_back(m);
    GradedCliffordModule H = assemble_sum(parts).module;
    auto basis = odd_operator_basis(H);
    Rng rng(5);
    Eigen::MatrixXd F0 = random_odd_operator(rng, basis);
    SpectralWindow w = make_window(H, F0);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_projection(w, F0));
}
BENCHMARK(BM_SpectralProjection);
BENCHMARK_MAIN();
