#include <benchmark/benchmark.h>

#include "hornplay/arena.hpp"
#include "hornplay/io.hpp"
#include "hornplay/parse.hpp"

using namespace hornplay;

namespace {

Theory plus_theory() {
    return parse_theory(read_file(std::string(HORNPLAY_FIXTURES_DIR) + "/plus.thy"));
}

Theory distractor_theory() {
    return parse_theory(read_file(std::string(HORNPLAY_FIXTURES_DIR) + "/distractor.thy"));
}

Atom nat_goal(const char* pred, int n) {
    Term t = Term::compound("z");
    for (int i = 0; i < n; ++i) t = Term::compound("s", {t});
    return Atom{pred, {t}};
}

HeuristicParams params(std::array<double, 5> w) {
    HeuristicParams p;
    p.weights = w;
    p.depth_limit = 30;
    return p;
}

void BM_unify_deep(benchmark::State& state) {
    Term a = parse_term("X");
    Term b = nat_goal("even", static_cast<int>(state.range(0))).args[0];
    for (auto _ : state) benchmark::DoNotOptimize(unify(a, b));
}
BENCHMARK(BM_unify_deep)->Arg(16)->Arg(64)->Arg(256);

void BM_search_even_chain(benchmark::State& state) {
    Theory th = plus_theory();
    Atom goal = nat_goal("even", static_cast<int>(state.range(0)));
    HeuristicParams p = params({0, 1, -1, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(search(th, goal, p, 100000));
}
BENCHMARK(BM_search_even_chain)->Arg(8)->Arg(20)->Arg(40);

void BM_search_distractors_blind(benchmark::State& state) {
    Theory th = distractor_theory();
    Atom goal = nat_goal("even", 20);
    HeuristicParams p = params({0, 0, 0, 0, 0});
    p.depth_limit = 12;
    for (auto _ : state)
        benchmark::DoNotOptimize(search(th, goal, p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_search_distractors_blind)->Arg(100)->Arg(1000);

void BM_self_play_generation(benchmark::State& state) {
    Theory th = distractor_theory();
    Atom goal = nat_goal("even", 20);
    HeuristicParams pa = params({0, 0, 0, 0, 0});
    HeuristicParams pb = params({0, 0.5, -0.5, 0, 0});
    pa.depth_limit = pb.depth_limit = 12;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            self_play_match(th, goal, pa, pb, Budgets{60, 30}, 0.9, 0));
}
BENCHMARK(BM_self_play_generation);

}  // namespace

BENCHMARK_MAIN();
