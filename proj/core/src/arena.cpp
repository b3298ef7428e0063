#include "hornplay/arena.hpp"

namespace hornplay {

Side decide_winner(double score_a, double score_b, int proved_a, int proved_b,
                   long cross_expansions_a, long cross_expansions_b) {
    if (score_a != score_b) return score_a > score_b ? Side::A : Side::B;
    if (proved_a != proved_b) return proved_a > proved_b ? Side::A : Side::B;
    if (cross_expansions_a != cross_expansions_b)
        return cross_expansions_a < cross_expansions_b ? Side::A : Side::B;
    return Side::A;
}

namespace {

void verify_or_throw(const Theory& theory, const Atom& goal, const Proof& proof) {
    Verdict v = check_proof(theory, goal, proof);
    if (!v.accepted)
        throw IntegrityError("prover emitted a bogus proof of " + format(goal) + " (" +
                             v.reason + ")");
}

}  // namespace

MatchResult naive_match(const Theory& theory, const std::vector<Atom>& obligations,
                        const HeuristicParams& pa, const HeuristicParams& pb, int budget) {
    for (const Atom& goal : obligations)
        if (!theory.knows_predicate(goal.predicate))
            throw std::invalid_argument("unknown predicate in obligation: " + goal.predicate);

    MatchResult r;
    for (const Atom& goal : obligations) {
        SearchOutcome oa = search(theory, goal, pa, budget);
        r.expansions_a += oa.expansions_used;
        if (oa.root_proved) {
            verify_or_throw(theory, goal, *oa.proof);
            ++r.proved_count_a;
        }
        SearchOutcome ob = search(theory, goal, pb, budget);
        r.expansions_b += ob.expansions_used;
        if (ob.root_proved) {
            verify_or_throw(theory, goal, *ob.proof);
            ++r.proved_count_b;
        }
    }
    r.score_a = r.proved_count_a;
    r.score_b = r.proved_count_b;
    r.winner = decide_winner(r.score_a, r.score_b, r.proved_count_a, r.proved_count_b, 0, 0);
    return r;
}

SelfPlayResult self_play_match(const Theory& theory, const Atom& target,
                               const HeuristicParams& pa, const HeuristicParams& pb,
                               const Budgets& budgets, double gamma, int generation,
                               bool trivial_filter) {
    if (budgets.harvest_budget < 1 || budgets.cross_budget < 1)
        throw std::invalid_argument("budgets must be >= 1");

    SelfPlayResult out;
    MatchResult& r = out.result;

    // Phase 1: both sides attempt the target.
    SearchOutcome oa = search(theory, target, pa, budgets.harvest_budget);
    SearchOutcome ob = search(theory, target, pb, budgets.harvest_budget);
    r.expansions_a += oa.expansions_used;
    r.expansions_b += ob.expansions_used;

    if (oa.root_proved) verify_or_throw(theory, target, *oa.proof);
    if (ob.root_proved) verify_or_throw(theory, target, *ob.proof);

    if (oa.root_proved || ob.root_proved) {
        if (oa.root_proved && ob.root_proved) {
            // Fewer expansions wins; tie goes to A.
            r.target_proved_by =
                ob.expansions_used < oa.expansions_used ? Side::B : Side::A;
        } else {
            r.target_proved_by = oa.root_proved ? Side::A : Side::B;
        }
        r.winner = *r.target_proved_by;
        out.target_proof = r.winner == Side::A ? std::move(oa.proof) : std::move(ob.proof);
        return out;
    }

    out.dataset_a = harvest(oa, node_values(oa.tree, gamma), Side::A, generation, theory,
                            trivial_filter);
    out.dataset_b = harvest(ob, node_values(ob.tree, gamma), Side::B, generation, theory,
                            trivial_filter);
    r.dataset_a_size = static_cast<int>(out.dataset_a.entries.size());
    r.dataset_b_size = static_cast<int>(out.dataset_b.entries.size());

    // Phase 2: each side attempts the opponent's dataset, in dataset order.
    long cross_a = 0, cross_b = 0;
    for (const ScoredConjecture& sc : out.dataset_b.entries) {
        SearchOutcome o = search(theory, sc.goal, pa, budgets.cross_budget);
        cross_a += o.expansions_used;
        if (o.root_proved) {
            verify_or_throw(theory, sc.goal, *o.proof);
            r.score_a += sc.value;
            ++r.proved_count_a;
        }
    }
    for (const ScoredConjecture& sc : out.dataset_a.entries) {
        SearchOutcome o = search(theory, sc.goal, pb, budgets.cross_budget);
        cross_b += o.expansions_used;
        if (o.root_proved) {
            verify_or_throw(theory, sc.goal, *o.proof);
            r.score_b += sc.value;
            ++r.proved_count_b;
        }
    }
    r.expansions_a += cross_a;
    r.expansions_b += cross_b;
    r.winner = decide_winner(r.score_a, r.score_b, r.proved_count_a, r.proved_count_b, cross_a,
                             cross_b);
    return out;
}

}  // namespace hornplay
