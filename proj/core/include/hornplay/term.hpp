#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hornplay {

// First-order term. A variable has an empty args vector and var == true;
// a constant is a Compound with zero args. Variable names start with an
// uppercase letter or '_', functors with a lowercase letter.
struct Term {
    std::string sym;
    std::vector<Term> args;
    bool var = false;

    static Term variable(std::string name) {
        Term t;
        t.sym = std::move(name);
        t.var = true;
        return t;
    }
    static Term compound(std::string functor, std::vector<Term> args = {}) {
        Term t;
        t.sym = std::move(functor);
        t.args = std::move(args);
        return t;
    }

    bool operator==(const Term& other) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool operator==(const Atom& other) const = default;
};

// Idempotent finite map from variable name to term: no domain variable
// occurs in any range term. Application is simultaneous.
class Substitution {
public:
    Substitution() = default;

    // Adds v -> t, composing eagerly so the map stays idempotent.
    // Returns false on occurs-check failure.
    bool bind(const std::string& v, const Term& t);

    const Term* lookup(const std::string& v) const;
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const std::map<std::string, Term>& entries() const { return map_; }
    void insert_raw(const std::string& v, Term t) { map_[v] = std::move(t); }

    bool operator==(const Substitution& other) const = default;

private:
    std::map<std::string, Term> map_;
};

Term apply_subst(const Substitution& s, const Term& t);
Atom apply_subst(const Substitution& s, const Atom& a);

bool occurs_in(const std::string& var, const Term& t);

// Most general unifier with occurs check; absent on clash.
std::optional<Substitution> unify(const Term& a, const Term& b);
std::optional<Substitution> unify(const Atom& a, const Atom& b);

// Extends s with the mgu of s(a) and s(b). Absent on clash.
std::optional<Substitution> unify_under(const Substitution& s, const Atom& a, const Atom& b);

// Renames variables to V0, V1, ... in first-occurrence order, depth-first
// left-to-right. Alpha-equivalent atoms have identical canonical forms.
Atom canonicalize(const Atom& a);

bool alpha_equivalent(const Atom& a, const Atom& b);

// Variables appearing in a term/atom, in first-occurrence order.
void collect_vars(const Term& t, std::vector<std::string>& out);
void collect_vars(const Atom& a, std::vector<std::string>& out);

// Term size: every functor and variable occurrence in the args plus one
// for the predicate/outer functor.
int term_size(const Term& t);
int atom_size(const Atom& a);

}  // namespace hornplay
