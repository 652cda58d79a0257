#include <benchmark/benchmark.h>

#include "pdd/counting.hpp"
#include "pdd/phase.hpp"
#include "pdd/rng.hpp"

namespace {

pdd::GridSet random_set(int r, long long N, double density, std::uint64_t seed) {
    pdd::Xoshiro256 rng(seed);
    pdd::GridSet g(r, N);
    for (long long x = 1; x <= N; ++x) {
        if (r == 1) {
            if (rng.uniform() < density) g.insert(x);
        } else {
            for (long long y = 1; y <= N; ++y)
                if (rng.uniform() < density) g.insert(x, y);
        }
    }
    return g;
}

void BM_count_translates_1d(benchmark::State& state) {
    auto A = random_set(1, state.range(0), 0.3, 1);
    pdd::Pattern P = pdd::pattern_1d({0, 1, 2, 5});
    long long d = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdd::count_translates(A, P, d, true));
        d = d % (A.N() - 1) + 1;
    }
}
BENCHMARK(BM_count_translates_1d)->Arg(1000)->Arg(10000);

void BM_count_translates_2d(benchmark::State& state) {
    auto A = random_set(2, state.range(0), 0.3, 2);
    pdd::Pattern P = {{0, 0}, {1, 0}, {0, 1}, {2, 2}};
    long long d = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdd::count_translates(A, P, d, true));
        d = d % (A.N() - 1) + 1;
    }
}
BENCHMARK(BM_count_translates_2d)->Arg(64)->Arg(256);

void BM_phase_profile(benchmark::State& state) {
    auto pat = pdd::FourPointPattern::from_xyz(1, 1, 2);
    std::array<mpq_class, 4> g = {mpq_class(1, 8), mpq_class(1, 8), mpq_class(1, 8),
                                  mpq_class(-1, 8)};
    auto f = pdd::build_phase_function(pat, state.range(0), mpq_class(3, 10), g);
    for (auto _ : state)
        benchmark::DoNotOptimize(pdd::phase_expectation_profile(f, pat));
}
BENCHMARK(BM_phase_profile)->Arg(499)->Arg(2003)->Unit(benchmark::kMillisecond);

}  // namespace
