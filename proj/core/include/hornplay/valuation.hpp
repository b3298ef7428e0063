#pragma once

#include <map>
#include <string>
#include <vector>

#include "hornplay/search.hpp"

namespace hornplay {

enum class Side { A, B };

inline char side_tag(Side s) { return s == Side::A ? 'A' : 'B'; }

// A proved subgoal tagged with its estimated value. The goal is canonical.
struct ScoredConjecture {
    Atom goal;
    double value = 0.0;  // in (0, 1]
    Side prover = Side::A;
    int generation = 0;
};

struct ConjectureDataset {
    std::vector<ScoredConjecture> entries;  // descending value, ties by goal text
    Side origin = Side::A;
};

// Importance of every goal node: the root has value 1; the j-th ranked of a
// goal's k and-node alternatives gets share (1/j)/H_k (alternatives ranked
// by the mean score of their subgoals descending, childless ones after, by
// clause id); every conjunct under an and-node of value u gets u * gamma.
// Keyed by goal creation index. Throws std::invalid_argument unless
// 0 < gamma <= 1.
std::map<int, double> node_values(const SearchTree& tree, double gamma);

// Collects every proved non-root goal node into a dataset: skips goals that
// unify directly with a theory fact (when trivial_filter is on),
// canonicalizes, keeps the maximum value among canonical duplicates, and
// re-verifies each entry's proof with check_proof before inclusion. Throws
// std::logic_error if a proved node yields no checkable proof.
ConjectureDataset harvest(const SearchOutcome& outcome, const std::map<int, double>& values,
                          Side side, int generation, const Theory& theory,
                          bool trivial_filter = true);

}  // namespace hornplay
