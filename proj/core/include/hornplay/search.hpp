#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hornplay/check.hpp"
#include "hornplay/theory.hpp"

namespace hornplay {

inline constexpr int kFeatureCount = 5;

// A prover variant: the linear heuristic's weight vector plus a depth
// limit. Weight order: bias, depth, term size, distinct variables,
// producing-clause body length.
struct HeuristicParams {
    std::array<double, kFeatureCount> weights{};
    int depth_limit = 1;

    bool operator==(const HeuristicParams& other) const = default;
};

using FeatureVector = std::array<double, kFeatureCount>;

// (1, depth, size of the goal atom, distinct variables in the goal, body
// length of the clause that produced the goal; 0 for the root).
FeatureVector features(const Atom& goal, int depth, int producing_clause_body_len);

double score(const HeuristicParams& params, const FeatureVector& f);

enum class NodeStatus { Open, Expanded, Proved, Failed };

struct GoalNode {
    Atom atom;
    int depth = 0;
    FeatureVector feats{};
    double score = 0.0;
    NodeStatus status = NodeStatus::Open;
    int parent_and = -1;           // index into SearchTree::ands, -1 for root
    int creation_index = 0;        // == index into SearchTree::goals
    std::vector<int> and_children;
};

struct AndNode {
    int clause_id = 0;
    Substitution binding;
    int parent_goal = 0;
    std::vector<int> goal_children;
    NodeStatus status = NodeStatus::Open;
};

struct SearchTree {
    std::vector<GoalNode> goals;  // creation order; goals[0] is the root
    std::vector<AndNode> ands;
    std::vector<int> expansion_order;  // goal indices in expansion order
};

struct SearchOutcome {
    SearchTree tree;
    bool root_proved = false;
    std::optional<Proof> proof;
    int expansions_used = 0;
    int budget = 0;
};

// Best-first and-or search: repeatedly expands the open goal node with the
// highest score (ties to the smaller creation index) by resolving it
// against every clause in id order, until the root is proved, no open node
// remains, or the budget is exhausted. Throws std::invalid_argument on a
// negative budget or a goal predicate unknown to the theory.
SearchOutcome search(const Theory& theory, const Atom& goal, const HeuristicParams& params,
                     int budget);

// Extracts a checkable proof for a proved goal node, choosing at each node
// the proved and-node with the smallest clause id. `claimed_goal` becomes
// the root proof goal and must be alpha-equivalent to the node's atom.
// Absent if the node is not proved or sibling subtrees instantiated a
// shared variable inconsistently.
std::optional<Proof> extract_proof(const Theory& theory, const SearchTree& tree,
                                   int goal_index, const Atom& claimed_goal);

}  // namespace hornplay
