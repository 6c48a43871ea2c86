#include <benchmark/benchmark.h>

#include <random>

#include "biharm/jets.hpp"
#include "biharm/resolvent.hpp"
#include "biharm/solutions.hpp"
#include "biharm/verify.hpp"

using namespace biharm;

namespace {

std::vector<Cx> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    std::vector<Cx> v(n);
    for (auto& z : v) {
        z = Cx{u(rng), u(rng)};
    }
    return v;
}

BasisTriple basis(std::size_t n) {
    SpectralParams p;
    p.n = n;
    p.k = random_vec(n, 1);
    p.m = random_vec(n, 2);
    p.k[0] = 1.0;
    p.mode = Mode::Harmonic;
    return solve_g(p);
}

void BM_JetMul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Jet a(random_vec(n, 3)), b(random_vec(n, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_JetMul)->Arg(4)->Arg(16)->Arg(64);

void BM_ResolventCoeffs(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolvent_coeffs(k));
    }
}
BENCHMARK(BM_ResolventCoeffs)->Arg(6)->Arg(12)->Arg(18);

void BM_GridEval(benchmark::State& state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const SolutionSpec spec(basis(8), HolomorphicFn::exp(Cx{0.5, 0.1}), 7);
    const Grid g{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}, {steps, steps, steps}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_eval(spec, g, 1));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_GridEval)->Arg(8)->Arg(16);

void BM_SymbolicResidual(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const SolutionSpec spec(basis(k + 1), HolomorphicFn::polynomial(random_vec(7, 5)), k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_biharmonic_sym(spec));
    }
}
BENCHMARK(BM_SymbolicResidual)->Arg(2)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
