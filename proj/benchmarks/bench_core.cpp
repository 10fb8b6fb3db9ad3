#include <benchmark/benchmark.h>

#include <random>

#include "grweyl/bridge.hpp"
#include "grweyl/graded_ideal.hpp"
#include "grweyl/text.hpp"

using namespace grweyl;

namespace {

std::mt19937_64 rng(12345);

std::int64_t rint(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

FinSet random_finset(std::size_t n, std::int64_t range) {
    std::vector<std::int64_t> v;
    while (v.size() < n) {
        std::int64_t e = rint(-range, range);
        if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
    }
    return FinSet(std::move(v));
}

Poly random_poly(int deg) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = Rational(rint(-9, 9));
    c.back() = 1;
    return Poly(std::move(c));
}

CElement random_celement(std::size_t terms, std::size_t deg_size, int poly_deg) {
    CElement e;
    for (std::size_t i = 0; i < terms; ++i)
        e += CElement::from_term(random_finset(deg_size, 8), random_poly(poly_deg));
    return e;
}

void BM_RingMultiply(benchmark::State& state) {
    CElement a = random_celement(static_cast<std::size_t>(state.range(0)), 3, 4);
    CElement b = random_celement(static_cast<std::size_t>(state.range(0)), 3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMultiply)->Arg(2)->Arg(8)->Arg(32);

void BM_IdealNormalize(benchmark::State& state) {
    std::vector<std::pair<Poly, FinSet>> gens;
    for (int i = 0; i < 3; ++i)
        gens.emplace_back(random_poly(4),
                          random_finset(static_cast<std::size_t>(state.range(0)), 6));
    for (auto _ : state) benchmark::DoNotOptimize(GradedIdeal::normalize(gens));
}
BENCHMARK(BM_IdealNormalize)->Arg(2)->Arg(4)->Arg(6);

void BM_WeylMultiply(benchmark::State& state) {
    WeylElem a, b;
    for (int i = 0; i < 4; ++i) {
        a += WeylElem::from_component(rint(-state.range(0), state.range(0)), random_poly(4));
        b += WeylElem::from_component(rint(-state.range(0), state.range(0)), random_poly(4));
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_WeylMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_K0Reduce(benchmark::State& state) {
    GroupRingExpr e;
    for (int i = 0; i < state.range(0); ++i)
        e += GroupRingExpr::u(random_finset(4, 12), Int(rint(-5, 5)));
    for (auto _ : state) benchmark::DoNotOptimize(k0_reduce(e));
}
BENCHMARK(BM_K0Reduce)->Arg(4)->Arg(32)->Arg(256);

void BM_DictionaryTable(benchmark::State& state) {
    PicElem f = PicElem::make(random_finset(3, 6),
                              Isometry{rint(0, 1) ? 1 : -1, rint(-6, 6)});
    for (auto _ : state) benchmark::DoNotOptimize(bridge_table(f, state.range(0)));
}
BENCHMARK(BM_DictionaryTable)->Arg(16)->Arg(64);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
    CElement a = random_celement(8, 3, 4);
    std::string text = to_text(a);
    for (auto _ : state) benchmark::DoNotOptimize(parse_celement(text));
}
BENCHMARK(BM_ParsePrintRoundTrip);

} // namespace

BENCHMARK_MAIN();
