#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "hornplay/arena.hpp"
#include "hornplay/io.hpp"

namespace hornplay {

// Deterministic RNG over the fully specified mt19937_64 bit stream.
// Distributions are hand-rolled (standard library distributions are
// implementation-defined), so byte-identical replays hold across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Box-Muller; consumes exactly two uniform draws.
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        int span = hi - lo + 1;
        int k = static_cast<int>(uniform01() * span);
        if (k >= span) k = span - 1;
        return lo + k;
    }

private:
    std::mt19937_64 engine_;
};

struct MutationConfig {
    double sigma = 0.2;
    double p_mut = 0.5;
    int depth_limit_step = 1;
    std::uint64_t seed = 0;
};

// Each weight gets a Gaussian(0, sigma^2) increment with probability p_mut;
// depth_limit takes a uniform step in [-depth_limit_step, depth_limit_step],
// clamped to >= 1. Consumes a fixed number of draws per call (draw-then-
// mask), so rng streams stay aligned whichever mutations fire.
HeuristicParams mutate(const HeuristicParams& params, Rng& rng, const MutationConfig& cfg);

enum class Pairing { ChampionChallenger, FreshPair };

enum class EvolutionOutcome { Solved, Exhausted };

struct EvolutionReport {
    std::vector<GenerationRecord> generations;
    EvolutionOutcome outcome = EvolutionOutcome::Exhausted;
    int solved_generation = -1;
    HeuristicParams winning_params;
    std::optional<Proof> proof;
    long total_expansions = 0;
};

// Called with each generation record as soon as it is final, before the
// next generation starts.
using RecordSink = std::function<void(const GenerationRecord&)>;

// Runs self-play matches generation by generation, mutating the winner,
// until the target is discharged or max_generations matches have run.
EvolutionReport evolve(const Theory& theory, const Atom& target, const HeuristicParams& init,
                       const Budgets& budgets, double gamma, const MutationConfig& mcfg,
                       int max_generations, Pairing pairing = Pairing::ChampionChallenger,
                       bool trivial_filter = true, const RecordSink& sink = {});

}  // namespace hornplay
