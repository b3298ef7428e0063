#pragma once

#include <optional>
#include <stdexcept>

#include "hornplay/valuation.hpp"

namespace hornplay {

// A prover emitted a proof the checker rejects. Always an implementation
// bug, never a normal game outcome.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MatchResult {
    double score_a = 0.0;
    double score_b = 0.0;
    int proved_count_a = 0;
    int proved_count_b = 0;
    long expansions_a = 0;
    long expansions_b = 0;
    int dataset_a_size = 0;
    int dataset_b_size = 0;
    std::optional<Side> target_proved_by;
    Side winner = Side::A;
};

struct Budgets {
    int harvest_budget = 1;  // one long attempt at the target per side
    int cross_budget = 1;    // per opposing-dataset item
};

// Tie-break ladder: higher score, then more entries proved, then fewer
// cross-phase expansions, then the incumbent A.
Side decide_winner(double score_a, double score_b, int proved_a, int proved_b,
                   long cross_expansions_a, long cross_expansions_b);

// The naive game: both provers attempt every obligation at the same budget;
// one point per checker-verified discharge.
MatchResult naive_match(const Theory& theory, const std::vector<Atom>& obligations,
                        const HeuristicParams& pa, const HeuristicParams& pb, int budget);

struct SelfPlayResult {
    MatchResult result;
    ConjectureDataset dataset_a;  // Da, harvested by side A
    ConjectureDataset dataset_b;  // Db, harvested by side B
    std::optional<Proof> target_proof;
};

// The self-play game: both provers search the target (phase 1); if neither
// proves it, each harvests a value-tagged dataset from its own tree and
// scores the sum of opponent-assigned values it can re-prove (phase 2).
SelfPlayResult self_play_match(const Theory& theory, const Atom& target,
                               const HeuristicParams& pa, const HeuristicParams& pb,
                               const Budgets& budgets, double gamma, int generation,
                               bool trivial_filter = true);

}  // namespace hornplay
