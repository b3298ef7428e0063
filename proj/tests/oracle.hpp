#pragma once

// Test-side oracle: a naive exhaustive breadth-first backward chainer,
// independent of the best-first search it is used to judge. Shares only
// the kernel and theory types.

#include <optional>
#include <vector>

#include "hornplay/check.hpp"
#include "hornplay/theory.hpp"

namespace oracle {

// True iff the goal has a derivation whose deepest subgoal sits at depth
// <= max_depth (the root is at depth 0), found by breadth-first exhaustive
// backward chaining.
bool provable(const hornplay::Theory& theory, const hornplay::Atom& goal, int max_depth);

// Every derivation of the goal up to max_depth, as checkable proof objects
// (at most `limit` of them).
std::vector<hornplay::Proof> enumerate_proofs(const hornplay::Theory& theory,
                                              const hornplay::Atom& goal, int max_depth,
                                              std::size_t limit = 1000);

// Helpers for fixture goals.
hornplay::Term nat(int n);                       // s^n(z)
hornplay::Atom even_goal(int n);                 // even(s^n(z))
hornplay::Atom plus_goal(int a, int b, int c);   // plus(s^a(z), s^b(z), s^c(z))

}  // namespace oracle
