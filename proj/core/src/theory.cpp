#include "hornplay/theory.hpp"

namespace hornplay {

Clause standardize_apart(const Clause& clause, int& fresh_counter) {
    std::vector<std::string> vars;
    collect_vars(clause.head, vars);
    for (const Atom& a : clause.body) collect_vars(a, vars);

    Substitution renaming;
    for (const std::string& v : vars)
        renaming.insert_raw(v, Term::variable("_G" + std::to_string(fresh_counter++)));

    Clause out;
    out.id = clause.id;
    out.head = apply_subst(renaming, clause.head);
    out.body.reserve(clause.body.size());
    for (const Atom& a : clause.body) out.body.push_back(apply_subst(renaming, a));
    return out;
}

namespace {

void format_term(const Term& t, std::string& out) {
    out += t.sym;
    if (!t.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i > 0) out += ',';
            format_term(t.args[i], out);
        }
        out += ')';
    }
}

void format_atom(const Atom& a, std::string& out) {
    out += a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i > 0) out += ',';
            format_term(a.args[i], out);
        }
        out += ')';
    }
}

}  // namespace

std::string format(const Term& t) {
    std::string out;
    format_term(t, out);
    return out;
}

std::string format(const Atom& a) {
    std::string out;
    format_atom(a, out);
    return out;
}

std::string format(const Clause& c) {
    std::string out;
    format_atom(c.head, out);
    if (!c.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < c.body.size(); ++i) {
            if (i > 0) out += ", ";
            format_atom(c.body[i], out);
        }
    }
    out += '.';
    return out;
}

std::string format(const Substitution& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, t] : s.entries()) {
        if (!first) out += ", ";
        first = false;
        out += v;
        out += " -> ";
        format_term(t, out);
    }
    out += '}';
    return out;
}

}  // namespace hornplay
