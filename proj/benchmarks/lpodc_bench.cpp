//
// Copyright (c) 2026 The lpodc authors
//
// SPDX-License-Identifier: MIT
//
#include <lpodc/evaluator.hpp>
#include <lpodc/generator.hpp>
#include <lpodc/grounder.hpp>
#include <lpodc/parser.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

namespace {

using namespace lpodc;

Program sample(const std::string& name) {
    std::ifstream     in(std::string(LPODC_SOURCE_DIR) + "/samples/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), name.ends_with(".crp") ? Dialect::Crp2 : Dialect::Lpod);
}

void BM_Translate(benchmark::State& state) {
    auto p = sample("pi2.lpod");
    for (auto _ : state) {
        benchmark::DoNotOptimize(asp::emit(lpod2asp(p, Criterion::Inclusion)));
    }
}
BENCHMARK(BM_Translate);

void BM_EvalLpod(benchmark::State& state) {
    auto p     = sample("pi2.lpod");
    auto c     = static_cast<Criterion>(state.range(0));
    auto doc   = lpod2asp(p, c);
    auto route = state.range(1) ? PreferenceRoute::Native : PreferenceRoute::Encoded;
    for (auto _ : state) {
        EvalOptions o;
        o.route = route;
        benchmark::DoNotOptimize(evalLpod(doc, p, c, o));
    }
    state.SetLabel(std::string(toString(c)) + (route == PreferenceRoute::Native ? "/native" : "/encoded"));
}
BENCHMARK(BM_EvalLpod)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ReferenceLpod(benchmark::State& state) {
    auto p = sample("pi2.lpod");
    for (auto _ : state) {
        benchmark::DoNotOptimize(preferred(p, Criterion::Inclusion));
    }
}
BENCHMARK(BM_ReferenceLpod)->Unit(benchmark::kMillisecond);

void BM_EvalCrp(benchmark::State& state) {
    auto p   = sample("pi3p.crp");
    auto doc = crp2asp(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evalCrp(doc, p));
    }
}
BENCHMARK(BM_EvalCrp)->Unit(benchmark::kMillisecond);

void BM_ReferenceCrp(benchmark::State& state) {
    auto p = sample("pi3p.crp");
    for (auto _ : state) {
        benchmark::DoNotOptimize(preferredAnswerSets(p));
    }
}
BENCHMARK(BM_ReferenceCrp)->Unit(benchmark::kMillisecond);

void BM_Monolithic(benchmark::State& state) {
    auto          doc = lpod2aspBase(sample("pi1.lpod"));
    EngineOptions o;
    o.cap = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solveMonolithic(doc, o));
    }
}
BENCHMARK(BM_Monolithic)->Unit(benchmark::kMillisecond);

void BM_RandomLpodTuples(benchmark::State& state) {
    std::mt19937_64 rng(42);
    LpodShape       shape;
    shape.atoms   = static_cast<int>(state.range(0));
    shape.ordered = 3;
    std::vector<Program> corpus;
    for (int i = 0; i != 20; ++i) {
        corpus.push_back(randomLpod(rng, shape));
    }
    EvalOptions o;
    o.solve.parallel = static_cast<std::size_t>(state.range(1));
    o.solve.engine.cap = 0;
    for (auto _ : state) {
        for (const auto& p : corpus) {
            benchmark::DoNotOptimize(evalLpod(lpod2asp(p, Criterion::Pareto), p, Criterion::Pareto, o));
        }
    }
}
BENCHMARK(BM_RandomLpodTuples)->ArgsProduct({{4, 6}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Grounding(benchmark::State& state) {
    auto doc = lpod2asp(sample("pi2.lpod"), Criterion::Cardinality);
    for (auto _ : state) {
        benchmark::DoNotOptimize(asp::ground(doc.layer(asp::Layer::Tuple), doc.constants, {}));
    }
}
BENCHMARK(BM_Grounding)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
