#include <benchmark/benchmark.h>

#include "bifix/atoms.hpp"
#include "bifix/witnesses.hpp"

// The empty-set atom has the largest pair automaton: 2^(n-2)+1 quotients.
static void BM_AtomEmptySet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa w = bifix::atom_witness(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bifix::atom_complexity(w, {}));
    }
}
BENCHMARK(BM_AtomEmptySet)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_AtomEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    bifix::Dfa w = bifix::atom_witness(n);
    for (auto _ : state) {
        auto found = bifix::atoms(w);
        benchmark::DoNotOptimize(found.size());
    }
}
BENCHMARK(BM_AtomEnumeration)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
