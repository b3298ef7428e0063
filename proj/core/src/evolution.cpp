#include "hornplay/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hornplay {

HeuristicParams mutate(const HeuristicParams& params, Rng& rng, const MutationConfig& cfg) {
    if (cfg.sigma < 0.0 || cfg.p_mut < 0.0 || cfg.p_mut > 1.0 || cfg.depth_limit_step < 0)
        throw std::invalid_argument("invalid mutation config");

    HeuristicParams out = params;
    for (int i = 0; i < kFeatureCount; ++i) {
        double step = rng.gaussian();
        double gate = rng.uniform01();
        if (gate < cfg.p_mut) out.weights[i] += cfg.sigma * step;
    }
    int dstep = rng.uniform_int(-cfg.depth_limit_step, cfg.depth_limit_step);
    out.depth_limit = std::max(1, params.depth_limit + dstep);
    return out;
}

EvolutionReport evolve(const Theory& theory, const Atom& target, const HeuristicParams& init,
                       const Budgets& budgets, double gamma, const MutationConfig& mcfg,
                       int max_generations, Pairing pairing, bool trivial_filter,
                       const RecordSink& sink) {
    if (max_generations < 0) throw std::invalid_argument("max_generations must be >= 0");

    Rng rng(mcfg.seed);
    EvolutionReport report;
    HeuristicParams champion = init;

    for (int g = 0; g < max_generations; ++g) {
        HeuristicParams pa = champion;
        if (pairing == Pairing::FreshPair) pa = mutate(champion, rng, mcfg);
        HeuristicParams pb = mutate(champion, rng, mcfg);

        SelfPlayResult sp =
            self_play_match(theory, target, pa, pb, budgets, gamma, g, trivial_filter);
        const MatchResult& r = sp.result;
        report.total_expansions += r.expansions_a + r.expansions_b;

        GenerationRecord rec;
        rec.generation = g;
        rec.champion_params = pa;
        rec.challenger_params = pb;
        rec.score_a = r.score_a;
        rec.score_b = r.score_b;
        rec.winner = side_tag(r.winner);
        rec.dataset_sizes = {r.dataset_a_size, r.dataset_b_size};
        rec.target_proved =
            r.target_proved_by ? std::string(1, side_tag(*r.target_proved_by)) : "none";
        rec.seed = mcfg.seed;
        report.generations.push_back(rec);
        if (sink) sink(rec);

        HeuristicParams winner_params = r.winner == Side::A ? pa : pb;
        if (r.target_proved_by) {
            report.outcome = EvolutionOutcome::Solved;
            report.solved_generation = g;
            report.winning_params = winner_params;
            report.proof = std::move(sp.target_proof);
            return report;
        }
        champion = winner_params;
    }

    report.outcome = EvolutionOutcome::Exhausted;
    report.winning_params = champion;
    return report;
}

}  // namespace hornplay
