#include "doctest.h"

#include <random>

#include "hornplay/io.hpp"
#include "hornplay/parse.hpp"
#include "hornplay/search.hpp"
#include "oracle.hpp"

using namespace hornplay;

namespace {

Theory even_theory() { return parse_theory("even(z).\neven(s(s(X))) :- even(X)."); }

Theory plus_theory() {
    return parse_theory(read_file(std::string(HORNPLAY_FIXTURES_DIR) + "/plus.thy"));
}

HeuristicParams mk(std::array<double, 5> w, int depth_limit = 12) {
    HeuristicParams p;
    p.weights = w;
    p.depth_limit = depth_limit;
    return p;
}

}  // namespace

TEST_CASE("features") {
    CHECK(features(parse_goal("even(z)"), 0, 0) == FeatureVector{1, 0, 2, 0, 0});
    CHECK(features(parse_goal("even(s(s(X)))"), 2, 1) == FeatureVector{1, 2, 4, 1, 1});
    CHECK(features(parse_goal("plus(X,Y,X)"), 1, 2) == FeatureVector{1, 1, 4, 2, 2});
}

TEST_CASE("score") {
    FeatureVector f{1, 2, 3, 1, 1};
    CHECK(score(mk({0, 0, 0, 0, 0}), f) == 0.0);
    CHECK(score(mk({1, 0, 0, 0, 0}), f) == 1.0);
    CHECK(score(mk({0.5, -1, 0, 0, 0}), f) == doctest::Approx(-1.5));
}

TEST_CASE("search: fact closes in one expansion") {
    auto out = search(even_theory(), parse_goal("even(z)"), mk({0, 0, 0, 0, 0}), 1);
    CHECK(out.root_proved);
    CHECK(out.expansions_used == 1);
    REQUIRE(out.proof);
    CHECK(check_proof(even_theory(), parse_goal("even(z)"), *out.proof).accepted);
}

TEST_CASE("search: even(s(z)) fails after one expansion") {
    auto out = search(even_theory(), parse_goal("even(s(z))"), mk({0, 0, 0, 0, 0}), 10);
    CHECK(!out.root_proved);
    CHECK(out.expansions_used == 1);
    for (const GoalNode& g : out.tree.goals) CHECK(g.status == NodeStatus::Failed);
}

TEST_CASE("search: zero budget leaves the root open") {
    auto out = search(even_theory(), parse_goal("even(s(s(z)))"), mk({0, 0, 0, 0, 0}), 0);
    CHECK(!out.root_proved);
    CHECK(out.expansions_used == 0);
    CHECK(out.tree.goals[0].status == NodeStatus::Open);
}

TEST_CASE("search: invalid arguments") {
    CHECK_THROWS_AS(search(even_theory(), parse_goal("even(z)"), mk({0, 0, 0, 0, 0}), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(search(even_theory(), parse_goal("odd(z)"), mk({0, 0, 0, 0, 0}), 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(search(even_theory(), parse_goal("even(z)"), mk({0, 0, 0, 0, 0}, 0), 10),
                    std::invalid_argument);
}

TEST_CASE("soundness: every emitted proof passes check_proof") {
    Theory th = plus_theory();
    std::mt19937 rng(11);
    int proved = 0;
    for (int i = 0; i < 120; ++i) {
        Atom goal;
        switch (rng() % 3) {
            case 0: goal = oracle::even_goal(2 * (rng() % 8)); break;
            case 1: {
                int a = rng() % 6, b = rng() % 6;
                goal = oracle::plus_goal(a, b, a + b);
                break;
            }
            default: {
                // open goal: plus(X, s^b(z), s^c(z))
                int b = rng() % 4;
                Atom g = oracle::plus_goal(0, b, b + (rng() % 4));
                g.args[0] = Term::variable("X");
                goal = g;
                break;
            }
        }
        HeuristicParams p =
            mk({0, (double)(int)(rng() % 5) - 2, (double)(int)(rng() % 5) - 2,
                (double)(int)(rng() % 3) - 1, (double)(int)(rng() % 3) - 1});
        auto out = search(th, goal, p, 200);
        if (out.root_proved) {
            REQUIRE(out.proof);
            CHECK(check_proof(th, goal, *out.proof).accepted);
            ++proved;
        }
    }
    CHECK(proved > 60);
}

TEST_CASE("oracle agreement on provability") {
    Theory th = plus_theory();
    HeuristicParams p = mk({0, 0, 0, 0, 0});
    for (int n = 0; n <= 7; ++n) {
        bool want = oracle::provable(th, oracle::even_goal(n), 12);
        bool got = search(th, oracle::even_goal(n), p, 100000).root_proved;
        CHECK(want == got);
        CHECK(want == (n % 2 == 0));
    }
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 6; ++c) {
                Atom g = oracle::plus_goal(a, b, c);
                CHECK(oracle::provable(th, g, 12) ==
                      search(th, g, p, 100000).root_proved);
            }
}

TEST_CASE("positive-scale invariance of the expansion sequence") {
    Theory th = plus_theory();
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
        HeuristicParams p = mk({rng() % 7 - 3.0, rng() % 7 - 3.0, rng() % 7 - 3.0,
                                rng() % 7 - 3.0, rng() % 7 - 3.0});
        HeuristicParams scaled = p;
        for (double& w : scaled.weights) w *= 3.0;
        Atom goal = oracle::plus_goal(rng() % 5, rng() % 5, rng() % 9);
        auto a = search(th, goal, p, 500);
        auto b = search(th, goal, scaled, 500);
        CHECK(a.tree.expansion_order == b.tree.expansion_order);
        CHECK(a.root_proved == b.root_proved);
    }
}

TEST_CASE("budget monotonicity") {
    Theory th = plus_theory();
    HeuristicParams p = mk({0, -1, 1, 0, 0});
    for (int n = 0; n <= 12; ++n) {
        Atom g = oracle::even_goal(n);
        for (int b1 = 0; b1 <= 8; b1 += 2) {
            bool small = search(th, g, p, b1).root_proved;
            bool large = search(th, g, p, 2 * b1 + 1).root_proved;
            if (small) CHECK(large);
        }
    }
}

TEST_CASE("determinism: identical inputs, identical trees") {
    Theory th = plus_theory();
    HeuristicParams p = mk({0.5, -0.25, 0.125, 1, -1});
    Atom g = oracle::plus_goal(3, 2, 5);
    auto a = search(th, g, p, 300);
    auto b = search(th, g, p, 300);
    CHECK(a.tree.expansion_order == b.tree.expansion_order);
    CHECK(a.tree.goals.size() == b.tree.goals.size());
    CHECK(a.expansions_used == b.expansions_used);
    for (std::size_t i = 0; i < a.tree.goals.size(); ++i) {
        CHECK(a.tree.goals[i].atom == b.tree.goals[i].atom);
        CHECK(a.tree.goals[i].status == b.tree.goals[i].status);
    }
}

TEST_CASE("tie-break: equal scores expand in creation order") {
    // All-zero weights score every node 0; expansion must follow creation.
    auto out = search(even_theory(), parse_goal("even(s(s(s(s(z)))))"), mk({0, 0, 0, 0, 0}), 10);
    CHECK(out.root_proved);
    for (std::size_t i = 1; i < out.tree.expansion_order.size(); ++i)
        CHECK(out.tree.expansion_order[i - 1] < out.tree.expansion_order[i]);
}

TEST_CASE("depth limit fails the branch, not the search") {
    // even(s^4(z)) needs depth 2; with depth_limit 1 the chain is cut but
    // the search still terminates cleanly.
    auto out = search(even_theory(), parse_goal("even(s(s(s(s(z)))))"), mk({0, 0, 0, 0, 0}, 1),
                      100);
    CHECK(!out.root_proved);
    CHECK(out.tree.goals[0].status == NodeStatus::Failed);

    // And a goal provable within the limit still goes through.
    auto ok = search(even_theory(), parse_goal("even(s(s(z)))"), mk({0, 0, 0, 0, 0}, 1), 100);
    CHECK(ok.root_proved);
}
