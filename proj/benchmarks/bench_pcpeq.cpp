#include <benchmark/benchmark.h>

#include <random>

#include "pcpeq/density.hpp"
#include "pcpeq/group_pcp.hpp"
#include "pcpeq/monoid_pcp.hpp"
#include "pcpeq/oracle.hpp"

using namespace pcpeq;

namespace {

Alphabet alphabet(std::initializer_list<const char*> names, Mode mode) {
    return Alphabet(std::vector<std::string>(names.begin(), names.end()), mode);
}

Morphism map_of(const Alphabet& s, const Alphabet& d, std::initializer_list<const char*> images) {
    std::vector<Word> words;
    for (const char* text : images) {
        words.push_back(parse_word(d, text));
    }
    return Morphism(s, d, std::move(words));
}

Instance two_petal_instance() {
    const Alphabet s = alphabet({"a", "b", "c"}, Mode::group);
    const Alphabet d = alphabet({"x", "y", "z"}, Mode::group);
    return Instance(map_of(s, d, {"x y x x", "y^-1", "z x z"}), map_of(s, d, {"x", "y x x y", "z"}));
}

Instance worked_instance() {
    const Alphabet s = alphabet({"a", "b"}, Mode::monoid);
    const Alphabet d = alphabet({"x", "y"}, Mode::monoid);
    return Instance(map_of(s, d, {"x y", "y"}), map_of(s, d, {"x", "y y"}));
}

/// g(a_i) = x_i w, h(a_i) = x_i w': marked pairs with long images.
Instance long_marked_instance(std::size_t k, std::size_t len) {
    std::vector<std::string> sn;
    std::vector<std::string> dn;
    for (std::size_t i = 0; i < k; ++i) {
        sn.push_back("a" + std::to_string(i));
        dn.push_back("x" + std::to_string(i));
    }
    const Alphabet s(sn, Mode::monoid);
    const Alphabet d(dn, Mode::monoid);
    std::mt19937_64 rng(k * 1000 + len);
    std::vector<Word> g;
    std::vector<Word> h;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Letter> gl{{static_cast<std::uint32_t>(i), 1}};
        std::vector<Letter> hl{{static_cast<std::uint32_t>(i), 1}};
        for (std::size_t j = 1; j < len; ++j) {
            gl.push_back({static_cast<std::uint32_t>(rng() % k), 1});
            hl.push_back({static_cast<std::uint32_t>(rng() % k), 1});
        }
        g.emplace_back(d, gl);
        h.emplace_back(d, hl);
    }
    return Instance(Morphism(s, d, g), Morphism(s, d, h));
}

void BM_SolveTwoPetal(benchmark::State& state) {
    const Instance I = two_petal_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(group::solve_pair(I));
    }
}
BENCHMARK(BM_SolveTwoPetal);

void BM_SolveWorkedMonoid(benchmark::State& state) {
    const Instance I = worked_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(monoid::solve_pair(I));
    }
}
BENCHMARK(BM_SolveWorkedMonoid);

void BM_SolveLongMarked(benchmark::State& state) {
    const Instance I = long_marked_instance(static_cast<std::size_t>(state.range(0)),
                                            static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(monoid::solve_pair(I));
    }
}
BENCHMARK(BM_SolveLongMarked)->Args({3, 8})->Args({4, 16})->Args({6, 32});

void BM_OracleEqualiser(benchmark::State& state) {
    const Instance I = two_petal_instance();
    const std::vector<Morphism> maps{I.g(), I.h()};
    const auto radius = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::enumerate_equaliser(maps, {radius, Mode::group}));
    }
}
BENCHMARK(BM_OracleEqualiser)->DenseRange(4, 7);

void BM_DensityExact(benchmark::State& state) {
    const density::Params p{2, 2, static_cast<std::size_t>(state.range(0)), 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(density::measure_density(p, density::Kind::marked_monoid));
    }
}
BENCHMARK(BM_DensityExact)->Arg(6)->Arg(10)->Arg(14);

void BM_DensityImmersionMonteCarlo(benchmark::State& state) {
    const density::Params p{2, 3, 8, 10000};
    for (auto _ : state) {
        benchmark::DoNotOptimize(density::measure_density(p, density::Kind::immersion_group));
    }
}
BENCHMARK(BM_DensityImmersionMonteCarlo);

} // namespace
BENCHMARK_MAIN();
