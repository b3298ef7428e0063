#include "hornplay/search.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace hornplay {

FeatureVector features(const Atom& goal, int depth, int producing_clause_body_len) {
    std::vector<std::string> vars;
    collect_vars(goal, vars);
    return FeatureVector{1.0, static_cast<double>(depth), static_cast<double>(atom_size(goal)),
                         static_cast<double>(vars.size()),
                         static_cast<double>(producing_clause_body_len)};
}

double score(const HeuristicParams& params, const FeatureVector& f) {
    double s = 0.0;
    for (int i = 0; i < kFeatureCount; ++i) s += params.weights[i] * f[i];
    return s;
}

namespace {

struct QueueEntry {
    double score;
    int index;
};
struct QueueLess {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.score != b.score) return a.score < b.score;
        return a.index > b.index;  // smaller creation index wins ties
    }
};

class Searcher {
public:
    Searcher(const Theory& theory, const HeuristicParams& params)
        : theory_(theory), params_(params) {}

    SearchOutcome run(const Atom& goal, int budget) {
        SearchOutcome out;
        out.budget = budget;

        add_goal(goal, 0, 0, -1);
        while (out.expansions_used < budget && tree_.goals[0].status != NodeStatus::Proved) {
            int gi = pop_open();
            if (gi < 0) break;
            expand(gi);
            ++out.expansions_used;
            tree_.expansion_order.push_back(gi);
        }

        out.root_proved = tree_.goals[0].status == NodeStatus::Proved;
        out.tree = std::move(tree_);
        if (out.root_proved) {
            out.proof = extract_proof(theory_, out.tree, 0, goal);
            if (!out.proof)
                throw std::logic_error("search: proved root has no extractable proof");
        }
        return out;
    }

private:
    int add_goal(const Atom& atom, int depth, int body_len, int parent_and) {
        GoalNode g;
        g.atom = atom;
        g.depth = depth;
        g.feats = features(atom, depth, body_len);
        g.score = score(params_, g.feats);
        g.parent_and = parent_and;
        g.creation_index = static_cast<int>(tree_.goals.size());
        tree_.goals.push_back(std::move(g));
        open_.push(QueueEntry{tree_.goals.back().score, tree_.goals.back().creation_index});
        return tree_.goals.back().creation_index;
    }

    int pop_open() {
        while (!open_.empty()) {
            QueueEntry e = open_.top();
            open_.pop();
            if (tree_.goals[e.index].status == NodeStatus::Open) return e.index;
        }
        return -1;
    }

    void expand(int gi) {
        const Atom atom = tree_.goals[gi].atom;
        const int depth = tree_.goals[gi].depth;
        for (const Clause& clause : theory_.clauses) {
            Clause fresh = standardize_apart(clause, fresh_counter_);
            auto mgu = unify(fresh.head, atom);
            if (!mgu) continue;

            int ai = static_cast<int>(tree_.ands.size());
            AndNode an;
            an.clause_id = clause.id;
            an.binding = *mgu;
            an.parent_goal = gi;
            if (fresh.body.empty()) {
                an.status = NodeStatus::Proved;
            } else if (depth + 1 > params_.depth_limit) {
                an.status = NodeStatus::Failed;
            } else {
                an.status = NodeStatus::Open;
                tree_.ands.push_back(std::move(an));
                for (const Atom& b : fresh.body) {
                    int ci = add_goal(apply_subst(*mgu, b), depth + 1,
                                      static_cast<int>(fresh.body.size()), ai);
                    tree_.ands[ai].goal_children.push_back(ci);
                }
                tree_.goals[gi].and_children.push_back(ai);
                continue;
            }
            tree_.ands.push_back(std::move(an));
            tree_.goals[gi].and_children.push_back(ai);
        }
        tree_.goals[gi].status = NodeStatus::Expanded;
        propagate_from_goal(gi);
    }

    bool recompute_goal(int gi) {
        GoalNode& g = tree_.goals[gi];
        if (g.status == NodeStatus::Proved || g.status == NodeStatus::Failed) return false;
        if (g.status == NodeStatus::Open) return false;
        bool all_failed = true;
        NodeStatus next = NodeStatus::Expanded;
        for (int ai : g.and_children) {
            NodeStatus s = tree_.ands[ai].status;
            if (s == NodeStatus::Proved) {
                next = NodeStatus::Proved;
                break;
            }
            if (s != NodeStatus::Failed) all_failed = false;
        }
        if (next != NodeStatus::Proved && all_failed) next = NodeStatus::Failed;
        if (next == g.status) return false;
        g.status = next;
        return next == NodeStatus::Proved || next == NodeStatus::Failed;
    }

    bool recompute_and(int ai) {
        AndNode& a = tree_.ands[ai];
        if (a.status == NodeStatus::Proved || a.status == NodeStatus::Failed) return false;
        bool all_proved = true;
        NodeStatus next = NodeStatus::Open;
        for (int ci : a.goal_children) {
            NodeStatus s = tree_.goals[ci].status;
            if (s == NodeStatus::Failed) {
                next = NodeStatus::Failed;
                break;
            }
            if (s != NodeStatus::Proved) all_proved = false;
        }
        if (next != NodeStatus::Failed && all_proved) next = NodeStatus::Proved;
        if (next == a.status) return false;
        a.status = next;
        return true;
    }

    void propagate_from_goal(int gi) {
        int cur = gi;
        while (recompute_goal(cur)) {
            int ai = tree_.goals[cur].parent_and;
            if (ai < 0) break;
            if (!recompute_and(ai)) break;
            cur = tree_.ands[ai].parent_goal;
        }
    }

    const Theory& theory_;
    const HeuristicParams& params_;
    SearchTree tree_;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLess> open_;
    int fresh_counter_ = 0;
};

void validate_params(const HeuristicParams& params) {
    if (params.depth_limit < 1) throw std::invalid_argument("depth_limit must be >= 1");
    for (double w : params.weights)
        if (!std::isfinite(w)) throw std::invalid_argument("weights must be finite");
}

}  // namespace

SearchOutcome search(const Theory& theory, const Atom& goal, const HeuristicParams& params,
                     int budget) {
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    validate_params(params);
    if (!theory.knows_predicate(goal.predicate))
        throw std::invalid_argument("unknown predicate: " + goal.predicate);
    return Searcher(theory, params).run(goal, budget);
}

namespace {

struct DerivedNode {
    int clause_id = 0;
    Clause std_clause;          // standardized apart with the shared counter
    Atom goal_pattern;          // claimed goal at the root, clause body atom below
    std::vector<DerivedNode> children;
};

// Re-derives the chosen proof skeleton left-to-right, composing one global
// substitution. Fails only if sibling subtrees instantiated a shared
// variable inconsistently.
bool derive(const Theory& theory, const SearchTree& tree, int gi, const Atom& pattern,
            Substitution& sigma, int& counter, DerivedNode& out) {
    const GoalNode& g = tree.goals[gi];
    int chosen = -1;
    for (int ai : g.and_children) {
        if (tree.ands[ai].status != NodeStatus::Proved) continue;
        if (chosen < 0 || tree.ands[ai].clause_id < tree.ands[chosen].clause_id) chosen = ai;
    }
    if (chosen < 0) return false;

    const AndNode& an = tree.ands[chosen];
    out.clause_id = an.clause_id;
    out.std_clause = standardize_apart(theory.clauses[an.clause_id], counter);
    out.goal_pattern = pattern;

    auto extended = unify_under(sigma, out.std_clause.head, pattern);
    if (!extended) return false;
    sigma = std::move(*extended);

    out.children.resize(out.std_clause.body.size());
    for (std::size_t i = 0; i < out.std_clause.body.size(); ++i) {
        if (!derive(theory, tree, an.goal_children[i], out.std_clause.body[i], sigma, counter,
                    out.children[i]))
            return false;
    }
    return true;
}

Proof build(const DerivedNode& node, const Substitution& sigma, bool is_root) {
    Proof p;
    // The root keeps the claimed goal verbatim; inner goals are stored fully
    // instantiated so bindings stay consistent across conjunct siblings.
    p.goal = is_root ? node.goal_pattern : apply_subst(sigma, node.goal_pattern);
    p.clause_id = node.clause_id;

    std::vector<std::string> vars;
    collect_vars(node.std_clause.head, vars);
    for (const Atom& b : node.std_clause.body) collect_vars(b, vars);
    collect_vars(p.goal, vars);
    for (const std::string& v : vars)
        if (const Term* t = sigma.lookup(v)) p.binding.insert_raw(v, *t);

    p.subproofs.reserve(node.children.size());
    for (const DerivedNode& c : node.children) p.subproofs.push_back(build(c, sigma, false));
    return p;
}

}  // namespace

std::optional<Proof> extract_proof(const Theory& theory, const SearchTree& tree, int goal_index,
                                   const Atom& claimed_goal) {
    if (goal_index < 0 || goal_index >= static_cast<int>(tree.goals.size())) return std::nullopt;
    if (tree.goals[goal_index].status != NodeStatus::Proved) return std::nullopt;

    DerivedNode root;
    Substitution sigma;
    int counter = 0;
    if (!derive(theory, tree, goal_index, claimed_goal, sigma, counter, root))
        return std::nullopt;
    return build(root, sigma, true);
}

}  // namespace hornplay
