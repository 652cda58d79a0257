#include <benchmark/benchmark.h>

#include "pdd/eqfree.hpp"

namespace {

void BM_behrend(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pdd::behrend_3apfree(state.range(0)));
}
BENCHMARK(BM_behrend)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_verify_free(benchmark::State& state) {
    auto fs = pdd::behrend_3apfree(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pdd::verify_free(fs));
}
BENCHMARK(BM_verify_free)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
