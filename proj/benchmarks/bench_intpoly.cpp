#include <benchmark/benchmark.h>

#include "pdd/claims.hpp"
#include "pdd/signatures.hpp"

namespace {

void BM_build_signature_polys(benchmark::State& state) {
    pdd::SignatureEngine eng;
    int f = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eng.build(pdd::Signature::from_flat(f)));
        f = (f + 577) % pdd::Signature::kCount;
    }
}
BENCHMARK(BM_build_signature_polys);

void BM_census_classify(benchmark::State& state) {
    pdd::SignatureEngine eng;
    for (auto _ : state) {
        std::size_t both = 0;
        for (int f = 0; f < pdd::Signature::kCount; ++f)
            if (eng.classify(pdd::Signature::from_flat(f)) == pdd::SigClass::BothZero) ++both;
        benchmark::DoNotOptimize(both);
    }
}
BENCHMARK(BM_census_classify)->Unit(benchmark::kMillisecond);

void BM_poly_mul(benchmark::State& state) {
    pdd::SignatureEngine eng;
    auto p = eng.build({1, 2, 1, 4});
    for (auto _ : state) benchmark::DoNotOptimize(p.p2 * p.p3);
}
BENCHMARK(BM_poly_mul);

}  // namespace
