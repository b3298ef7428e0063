#pragma once

#include <map>
#include <string>
#include <vector>

#include "hornplay/term.hpp"

namespace hornplay {

// Horn clause: head :- body. An empty body is a fact. The id is the
// clause's 0-based position in the source theory file.
struct Clause {
    int id = 0;
    Atom head;
    std::vector<Atom> body;

    bool is_fact() const { return body.empty(); }
    bool operator==(const Clause& other) const = default;
};

struct Theory {
    std::vector<Clause> clauses;
    std::map<std::string, int> predicate_arity;

    bool knows_predicate(const std::string& p) const {
        return predicate_arity.count(p) != 0;
    }
};

// Renames all clause variables to fresh names _G<counter>, _G<counter+1>, ...
// in first-occurrence order (head, then body atoms). Advances the counter by
// the number of distinct variables.
Clause standardize_apart(const Clause& clause, int& fresh_counter);

// Deterministic concrete syntax; parse(format(v)) is structurally identical
// to v.
std::string format(const Term& t);
std::string format(const Atom& a);
std::string format(const Clause& c);
std::string format(const Substitution& s);

}  // namespace hornplay
