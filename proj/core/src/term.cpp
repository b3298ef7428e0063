#include "hornplay/term.hpp"

#include <algorithm>

namespace hornplay {

Term apply_subst(const Substitution& s, const Term& t) {
    if (t.var) {
        if (const Term* r = s.lookup(t.sym)) return *r;
        return t;
    }
    Term out;
    out.sym = t.sym;
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(apply_subst(s, a));
    return out;
}

Atom apply_subst(const Substitution& s, const Atom& a) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(apply_subst(s, t));
    return out;
}

bool occurs_in(const std::string& var, const Term& t) {
    if (t.var) return t.sym == var;
    return std::any_of(t.args.begin(), t.args.end(),
                       [&](const Term& a) { return occurs_in(var, a); });
}

const Term* Substitution::lookup(const std::string& v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
}

bool Substitution::bind(const std::string& v, const Term& t) {
    Term resolved = apply_subst(*this, t);
    if (resolved.var && resolved.sym == v) return true;  // trivial X -> X
    if (occurs_in(v, resolved)) return false;
    Substitution single;
    single.map_[v] = resolved;
    for (auto& [key, range] : map_) range = apply_subst(single, range);
    map_[v] = std::move(resolved);
    return true;
}

namespace {

bool unify_into(Substitution& s, const Term& a, const Term& b) {
    Term ra = apply_subst(s, a);
    Term rb = apply_subst(s, b);
    if (ra.var) return s.bind(ra.sym, rb);
    if (rb.var) return s.bind(rb.sym, ra);
    if (ra.sym != rb.sym || ra.args.size() != rb.args.size()) return false;
    for (std::size_t i = 0; i < ra.args.size(); ++i)
        if (!unify_into(s, ra.args[i], rb.args[i])) return false;
    return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
    Substitution s;
    if (!unify_into(s, a, b)) return std::nullopt;
    return s;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
    Substitution s;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!unify_into(s, a.args[i], b.args[i])) return std::nullopt;
    return s;
}

std::optional<Substitution> unify_under(const Substitution& s, const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
    Substitution out = s;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!unify_into(out, a.args[i], b.args[i])) return std::nullopt;
    return out;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.var) {
        if (std::find(out.begin(), out.end(), t.sym) == out.end()) out.push_back(t.sym);
        return;
    }
    for (const Term& a : t.args) collect_vars(a, out);
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const Term& t : a.args) collect_vars(t, out);
}

namespace {

Term rename_term(const Term& t, std::map<std::string, std::string>& names) {
    if (t.var) {
        auto it = names.find(t.sym);
        if (it == names.end())
            it = names.emplace(t.sym, "V" + std::to_string(names.size())).first;
        return Term::variable(it->second);
    }
    Term out;
    out.sym = t.sym;
    out.args.reserve(t.args.size());
    for (const Term& a : t.args) out.args.push_back(rename_term(a, names));
    return out;
}

}  // namespace

Atom canonicalize(const Atom& a) {
    std::map<std::string, std::string> names;
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(rename_term(t, names));
    return out;
}

bool alpha_equivalent(const Atom& a, const Atom& b) {
    return canonicalize(a) == canonicalize(b);
}

int term_size(const Term& t) {
    int n = 1;
    for (const Term& a : t.args) n += term_size(a);
    return n;
}

int atom_size(const Atom& a) {
    int n = 1;
    for (const Term& t : a.args) n += term_size(t);
    return n;
}

}  // namespace hornplay
