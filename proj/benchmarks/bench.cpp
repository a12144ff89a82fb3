#include <benchmark/benchmark.h>

#include <random>

#include "nps/catalog.hpp"
#include "nps/exclusion.hpp"
#include "nps/multiplier.hpp"
#include "nps/search.hpp"
#include "nps/sequence.hpp"

namespace {

nps::Sequence random_sequence(uint32_t p, uint32_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    nps::Sequence s{p, {}};
    for (uint32_t i = 0; i < n; ++i) s.symbols.push_back(nps::Symbol::root(uint32_t(rng() % p)));
    return s;
}

void BM_Autocorrelation(benchmark::State& state) {
    auto s = random_sequence(3, uint32_t(state.range(0)), 99);
    for (auto _ : state) benchmark::DoNotOptimize(nps::autocorrelation(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Autocorrelation)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_ExclusionSweepGammaMinus1(benchmark::State& state) {
    for (auto _ : state) {
        size_t certs = 0;
        for (uint32_t n = 2; n <= 100; ++n)
            for (uint32_t p : nps::candidate_primes(n, -1, nps::Mode::pary))
                certs += bool(nps::full_exclusion(n, p, -1, nps::Mode::pary));
        benchmark::DoNotOptimize(certs);
    }
}
BENCHMARK(BM_ExclusionSweepGammaMinus1);

void BM_OrbitCensus92(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nps::orbits(92, 3, 13).census());
}
BENCHMARK(BM_OrbitCensus92);

void BM_OrbitCover91(benchmark::State& state) {
    auto os = nps::orbits(92, 3, 13);
    for (auto _ : state) benchmark::DoNotOptimize(nps::orbit_cover_feasible(os, 91, 3));
}
BENCHMARK(BM_OrbitCover91);

void BM_SearchPary9x7(benchmark::State& state) {
    nps::SearchSpec spec;
    spec.n = 9;
    spec.p = 7;
    spec.gamma = 2;
    for (auto _ : state) benchmark::DoNotOptimize(nps::search(spec));
}
BENCHMARK(BM_SearchPary9x7);

void BM_SearchWitness17(benchmark::State& state) {
    nps::SearchSpec spec;
    spec.n = 17;
    spec.p = 3;
    spec.gamma = 2;
    for (auto _ : state) benchmark::DoNotOptimize(nps::search(spec));
}
BENCHMARK(BM_SearchWitness17);

}  // namespace

BENCHMARK_MAIN();
