#include <benchmark/benchmark.h>

#include "bifix/determinize.hpp"
#include "bifix/minimize.hpp"
#include "bifix/ops.hpp"
#include "bifix/witnesses.hpp"

// Reversal is the powerset-heavy operation: 2^(n-3)+2 live subsets.
static void BM_ReverseTernary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa w = bifix::ternary_witness(n);
    for (auto _ : state) {
        bifix::Dfa r = bifix::reverse(w);
        benchmark::DoNotOptimize(r.state_count());
    }
}
BENCHMARK(BM_ReverseTernary)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_MinimizeProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa left = bifix::ternary_witness(n);
    bifix::Dfa right = bifix::ternary_dialect(n);
    for (auto _ : state) {
        bifix::Dfa u = bifix::boolean(left, right, bifix::BooleanOp::Union);
        benchmark::DoNotOptimize(u.state_count());
    }
}
BENCHMARK(BM_MinimizeProduct)->Arg(9)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
