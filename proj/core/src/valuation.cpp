#include "hornplay/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornplay {

std::map<int, double> node_values(const SearchTree& tree, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must be in (0,1]");

    std::map<int, double> values;
    if (tree.goals.empty()) return values;
    values[0] = 1.0;

    // Goal creation order is a topological order (parents precede children).
    for (const GoalNode& g : tree.goals) {
        auto it = values.find(g.creation_index);
        if (it == values.end() || g.and_children.empty()) continue;
        double v = it->second;

        struct Ranked {
            int and_index;
            bool scored;
            double mean_score;
            int clause_id;
        };
        std::vector<Ranked> ranked;
        ranked.reserve(g.and_children.size());
        for (int ai : g.and_children) {
            const AndNode& a = tree.ands[ai];
            Ranked r{ai, !a.goal_children.empty(), 0.0, a.clause_id};
            if (r.scored) {
                for (int ci : a.goal_children) r.mean_score += tree.goals[ci].score;
                r.mean_score /= static_cast<double>(a.goal_children.size());
            }
            ranked.push_back(r);
        }
        std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
            if (x.scored != y.scored) return x.scored;  // childless rank last
            if (x.scored && x.mean_score != y.mean_score) return x.mean_score > y.mean_score;
            return x.clause_id < y.clause_id;
        });

        double harmonic = 0.0;
        for (std::size_t j = 1; j <= ranked.size(); ++j) harmonic += 1.0 / static_cast<double>(j);
        for (std::size_t j = 0; j < ranked.size(); ++j) {
            double share = (1.0 / static_cast<double>(j + 1)) / harmonic;
            double u = v * share;
            for (int ci : tree.ands[ranked[j].and_index].goal_children)
                values[ci] = u * gamma;
        }
    }
    return values;
}

namespace {

bool unifies_with_fact(const Atom& atom, const Theory& theory) {
    int counter = 0;
    for (const Clause& c : theory.clauses) {
        if (!c.is_fact()) continue;
        Clause fresh = standardize_apart(c, counter);
        if (unify(fresh.head, atom)) return true;
    }
    return false;
}

}  // namespace

ConjectureDataset harvest(const SearchOutcome& outcome, const std::map<int, double>& values,
                          Side side, int generation, const Theory& theory, bool trivial_filter) {
    std::map<std::string, ScoredConjecture> best;  // keyed by canonical goal text

    for (const GoalNode& g : outcome.tree.goals) {
        if (g.creation_index == 0) continue;  // root is the target, never harvested
        if (g.status != NodeStatus::Proved) continue;
        if (trivial_filter && unifies_with_fact(g.atom, theory)) continue;

        auto vit = values.find(g.creation_index);
        if (vit == values.end()) continue;

        Atom canonical = canonicalize(g.atom);
        auto proof = extract_proof(theory, outcome.tree, g.creation_index, canonical);
        if (!proof || !check_proof(theory, canonical, *proof).accepted)
            throw std::logic_error("harvest: proved node failed proof re-verification");

        std::string key = format(canonical);
        auto it = best.find(key);
        if (it == best.end() || it->second.value < vit->second)
            best[key] = ScoredConjecture{canonical, vit->second, side, generation};
    }

    ConjectureDataset ds;
    ds.origin = side;
    ds.entries.reserve(best.size());
    for (auto& [key, sc] : best) ds.entries.push_back(std::move(sc));
    std::sort(ds.entries.begin(), ds.entries.end(),
              [](const ScoredConjecture& x, const ScoredConjecture& y) {
                  if (x.value != y.value) return x.value > y.value;
                  return format(x.goal) < format(y.goal);
              });
    return ds;
}

}  // namespace hornplay
