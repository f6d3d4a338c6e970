#include "conslaw/lie.hpp"
#include "conslaw/scenario.hpp"
#include "conslaw/solver.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace conslaw;

namespace {

Polynomial random_poly(const SpacePtr& sp, std::mt19937_64& rng, int terms,
                       unsigned max_deg) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    Polynomial p = Polynomial::zero(sp);
    for (int t = 0; t < terms; ++t) {
        Exponents e(sp->size(), 0);
        unsigned budget = deg(rng);
        for (unsigned d = 0; d < budget; ++d)
            e[std::uniform_int_distribution<std::size_t>(0, sp->size() - 1)(rng)]++;
        p.add_term(e, Rational(num(rng)));
    }
    return p;
}

void bm_polynomial_multiply(benchmark::State& state) {
    auto sp = VariableSpace::make({{"x", 6, 1}}, false,
                                  VariableSpace::TimeVar::None);
    std::mt19937_64 rng(1);
    Polynomial a = random_poly(sp, rng, static_cast<int>(state.range(0)), 4);
    Polynomial b = random_poly(sp, rng, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_polynomial_multiply)->Arg(16)->Arg(64);

void bm_lie_bracket(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    cfg.flow = FlowSpec::heavy_ball(Rational(1));
    Scenario sc = build_scenario(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(lie_bracket(sc.fields[0], sc.fields[1]));
}
BENCHMARK(bm_lie_bracket);

void bm_solve_laws_gf(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    Scenario sc = build_scenario(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve_laws(sc.fields, sc.degree, sc.time_cap, cfg.seed));
}
BENCHMARK(bm_solve_laws_gf);

void bm_solve_laws_mf(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    cfg.flow = FlowSpec::heavy_ball(Rational(1));
    Scenario sc = build_scenario(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve_laws(sc.fields, sc.degree, sc.time_cap, cfg.seed));
}
BENCHMARK(bm_solve_laws_mf);

void bm_lie_trace_gf(benchmark::State& state) {
    ScenarioConfig cfg;
    cfg.arch = Architecture::linear({2, 2, 2});
    Scenario sc = build_scenario(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(lie_trace_analysis(sc.fields, cfg.seed));
}
BENCHMARK(bm_lie_trace_gf);

} // namespace

BENCHMARK_MAIN();
