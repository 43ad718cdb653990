#include "shapetile/shapetile.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace shapetile;

namespace {

LatticeTile random_lattice(std::size_t cells, long extent, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pos(0, extent - 1), w(1, 5);
    LatticeTile t;
    while (t.weights.size() < cells) t.add(Cell{pos(rng), pos(rng)}, w(rng));
    return t;
}

LatticeTile corner_tromino() {
    LatticeTile t;
    t.add(Cell{0, 0}, 1);
    t.add(Cell{1, 0}, 1);
    t.add(Cell{0, 1}, 1);
    return t;
}

void BM_PolyMultiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const LaurentPoly f = star_factor(random_lattice(n, 16, 1));
    const LaurentPoly g = star_factor(random_lattice(n, 16, 2));
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMultiply)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Encode(benchmark::State& state) {
    const WeightedTile t = tile_from_lattice(random_lattice(static_cast<std::size_t>(state.range(0)), 24, 3));
    for (auto _ : state) benchmark::DoNotOptimize(encode(t));
}
BENCHMARK(BM_Encode)->RangeMultiplier(4)->Range(8, 256);

void BM_Condition2(benchmark::State& state) {
    const LatticeTile t = random_lattice(static_cast<std::size_t>(state.range(0)), 12, 4);
    for (auto _ : state) benchmark::DoNotOptimize(condition2_check(t));
}
BENCHMARK(BM_Condition2)->RangeMultiplier(2)->Range(4, 64);

void BM_SearchQTromino(benchmark::State& state) {
    SearchOptions opt;
    opt.anchor = 1;
    for (auto _ : state) benchmark::DoNotOptimize(search_q(corner_tromino(), {3, 5}, opt));
}
BENCHMARK(BM_SearchQTromino)->Unit(benchmark::kMillisecond);

void BM_SearchZTromino(benchmark::State& state) {
    SearchOptions opt;
    opt.anchor = 1;
    for (auto _ : state) benchmark::DoNotOptimize(search_z(corner_tromino(), {3, 5}, opt));
}
BENCHMARK(BM_SearchZTromino)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
