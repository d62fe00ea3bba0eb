#include <benchmark/benchmark.h>

#include "bifix/semigroup.hpp"
#include "bifix/witnesses.hpp"

// The semigroup closure dominates the syntactic-complexity verification:
// at n=7 the witness has 688 generators and 1985 elements.
static void BM_ClosureWstream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa w = bifix::wstream_witness(n);
    auto letters = bifix::letter_transformations(w);
    for (auto _ : state) {
        auto c = bifix::closure(letters);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_ClosureWstream)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ClosureTernary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa w = bifix::ternary_witness(n);
    auto letters = bifix::letter_transformations(w);
    for (auto _ : state) {
        auto c = bifix::closure(letters);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_ClosureTernary)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
