#pragma once

#include <string>
#include <vector>

#include "hornplay/theory.hpp"

namespace hornplay {

// Proof tree node: the goal it establishes, the clause applied to it, the
// binding under which the clause head matches the goal, and one subproof
// per body atom.
struct Proof {
    Atom goal;
    int clause_id = 0;
    Substitution binding;
    std::vector<Proof> subproofs;

    bool operator==(const Proof& other) const = default;
};

struct Verdict {
    bool accepted = false;
    std::string reason;      // empty when accepted
    std::vector<int> path;   // child indices to the first failing node

    static Verdict ok() { return Verdict{true, {}, {}}; }
};

// Verifies a proof by matching only: at each node the stored binding must
// make the deterministically standardized clause head identical to the
// node's goal, and each subproof's goal must equal the corresponding body
// atom under that binding. Never searches, never unifies.
//
// Rejection reasons: goal-mismatch, bad-clause-id, arity-mismatch,
// head-mismatch, body-mismatch.
Verdict check_proof(const Theory& theory, const Atom& claimed_goal, const Proof& proof);

}  // namespace hornplay
