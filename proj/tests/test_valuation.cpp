#include "doctest.h"

#include <cmath>
#include <random>

#include "hornplay/io.hpp"
#include "hornplay/parse.hpp"
#include "hornplay/valuation.hpp"
#include "oracle.hpp"

using namespace hornplay;

namespace {

Theory even_theory() { return parse_theory("even(z).\neven(s(s(X))) :- even(X)."); }

HeuristicParams zero_params() {
    HeuristicParams p;
    p.depth_limit = 12;
    return p;
}

}  // namespace

TEST_CASE("node_values: root proved directly by a fact") {
    auto out = search(even_theory(), parse_goal("even(z)"), zero_params(), 5);
    auto values = node_values(out.tree, 0.9);
    REQUIRE(values.size() == 1);
    CHECK(values.at(0) == 1.0);
}

TEST_CASE("node_values: even chain with gamma 0.9") {
    auto out = search(even_theory(), parse_goal("even(s(s(s(s(z)))))"), zero_params(), 10);
    REQUIRE(out.root_proved);
    auto values = node_values(out.tree, 0.9);
    // Single applicable clause at each level: shares are all 1.
    CHECK(values.at(0) == 1.0);
    CHECK(values.at(1) == doctest::Approx(0.9));
    CHECK(values.at(2) == doctest::Approx(0.81));
}

TEST_CASE("node_values: harmonic shares over two alternatives") {
    // Two distinct rules can prove p; each spawns one subgoal.
    Theory th = parse_theory(
        "p(X) :- q(X).\n"
        "p(X) :- r(X).\n"
        "q(z).\n"
        "r(z).");
    HeuristicParams params = zero_params();
    auto out = search(th, parse_goal("p(z)"), params, 10);
    auto values = node_values(out.tree, 1.0);
    // H_2 = 1.5; equal mean scores, so rank follows clause id.
    CHECK(values.at(1) == doctest::Approx((1.0 / 1.0) / 1.5));
    CHECK(values.at(2) == doctest::Approx((1.0 / 2.0) / 1.5));
}

TEST_CASE("node_values rejects gamma outside (0,1]") {
    auto out = search(even_theory(), parse_goal("even(z)"), zero_params(), 5);
    CHECK_THROWS_AS(node_values(out.tree, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(node_values(out.tree, 1.5), std::invalid_argument);
    CHECK_NOTHROW(node_values(out.tree, 1.0));
}

TEST_CASE("harvest: even chain keeps one non-trivial conjecture") {
    Theory th = even_theory();
    auto out = search(th, parse_goal("even(s(s(s(s(z)))))"), zero_params(), 10);
    auto ds = harvest(out, node_values(out.tree, 0.9), Side::A, 0, th);
    // even(z) falls to the one-step-trivial filter, the root is excluded.
    REQUIRE(ds.entries.size() == 1);
    CHECK(format(ds.entries[0].goal) == "even(s(s(z)))");
    CHECK(ds.entries[0].value == doctest::Approx(0.9));
    CHECK(ds.entries[0].prover == Side::A);
}

TEST_CASE("harvest: trivial filter can be switched off") {
    Theory th = even_theory();
    auto out = search(th, parse_goal("even(s(s(s(s(z)))))"), zero_params(), 10);
    auto ds = harvest(out, node_values(out.tree, 0.9), Side::A, 0, th, false);
    REQUIRE(ds.entries.size() == 2);
    CHECK(format(ds.entries[0].goal) == "even(s(s(z)))");
    CHECK(format(ds.entries[1].goal) == "even(z)");
}

TEST_CASE("harvest: no proved non-root nodes gives an empty dataset") {
    Theory th = even_theory();
    auto out = search(th, parse_goal("even(s(z))"), zero_params(), 10);
    auto ds = harvest(out, node_values(out.tree, 0.9), Side::B, 2, th);
    CHECK(ds.entries.empty());
    CHECK(ds.origin == Side::B);
}

TEST_CASE("harvest: canonical duplicates keep the maximum value") {
    // Two routes spawn alpha-equivalent q subgoals at different depths and
    // ranks; the root itself stays unprovable so both get proved.
    Theory th = parse_theory(
        "p :- q(X), nope.\n"
        "p :- t, nope.\n"
        "t :- q(Y).\n"
        "q(X) :- r(X).\n"
        "r(X).\n"
        "nope :- nope.");
    HeuristicParams params = zero_params();
    params.depth_limit = 6;
    auto out = search(th, parse_goal("p"), params, 60);
    CHECK(!out.root_proved);
    auto values = node_values(out.tree, 0.9);
    auto ds = harvest(out, values, Side::A, 0, th);

    int proved_q_nodes = 0;
    for (const GoalNode& g : out.tree.goals)
        if (g.atom.predicate == "q" && g.status == NodeStatus::Proved) ++proved_q_nodes;
    REQUIRE(proved_q_nodes == 2);
    // Both q nodes canonicalize to q(V0); one entry survives with the
    // larger of the two values.
    int q_entries = 0;
    double q_value = 0;
    double max_q = 0;
    for (const auto& e : ds.entries)
        if (e.goal.predicate == "q") {
            ++q_entries;
            q_value = e.value;
        }
    for (const GoalNode& g : out.tree.goals)
        if (g.atom.predicate == "q" && g.status == NodeStatus::Proved)
            max_q = std::max(max_q, values.at(g.creation_index));
    CHECK(q_entries == 1);
    CHECK(q_value == doctest::Approx(max_q));
}

TEST_CASE("properties: shares sum to 1, values in (0,1], non-increasing") {
    Theory th = parse_theory(read_file(std::string(HORNPLAY_FIXTURES_DIR) + "/plus.thy"));
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        HeuristicParams p;
        p.depth_limit = 8;
        for (double& w : p.weights) w = (rng() % 9) - 4.0;
        Atom goal = rng() % 2 ? oracle::even_goal(rng() % 10)
                              : oracle::plus_goal(rng() % 5, rng() % 5, rng() % 9);
        auto out = search(th, goal, p, 1 + rng() % 60);
        double gamma = 0.5 + 0.5 * ((rng() % 100) / 100.0);
        auto values = node_values(out.tree, gamma);

        for (const auto& [idx, v] : values) {
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
            // Non-increasing along the path to the root.
            int parent_and = out.tree.goals[idx].parent_and;
            if (parent_and >= 0) {
                int parent = out.tree.ands[parent_and].parent_goal;
                CHECK(v <= values.at(parent) + 1e-12);
            }
        }

        // OR-shares under every valued goal node sum to 1.
        for (const GoalNode& g : out.tree.goals) {
            if (g.and_children.empty() || !values.count(g.creation_index)) continue;
            std::size_t k = g.and_children.size();
            double h = 0;
            for (std::size_t j = 1; j <= k; ++j) h += 1.0 / j;
            double sum = 0;
            for (std::size_t j = 1; j <= k; ++j) sum += (1.0 / j) / h;
            CHECK(std::abs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("every dataset entry re-verifies (none can be unproved)") {
    Theory th = parse_theory(read_file(std::string(HORNPLAY_FIXTURES_DIR) + "/plus.thy"));
    HeuristicParams p;
    p.depth_limit = 10;
    p.weights = {0, 1, -1, 0, 0};
    auto out = search(th, oracle::plus_goal(4, 4, 8), p, 100);
    auto ds = harvest(out, node_values(out.tree, 0.9), Side::A, 0, th);
    for (const auto& e : ds.entries) {
        CHECK(oracle::provable(th, e.goal, 10));
    }
}
