#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hornplay/theory.hpp"

namespace hornplay {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    int line;
    int column;
};

struct ArityError : ParseError {
    ArityError(std::string symbol, int seen, int expected, int line, int column)
        : ParseError("arity conflict on '" + symbol + "': used with arity " +
                         std::to_string(seen) + " but previously " + std::to_string(expected),
                     line, column),
          symbol(std::move(symbol)),
          arity_seen(seen),
          arity_expected(expected) {}
    std::string symbol;
    int arity_seen;
    int arity_expected;
};

// Parses a theory file: clauses "head." or "head :- b1, ..., bn." with
// '%' line comments. Clause ids follow source order. Predicate and functor
// arities must be consistent across the whole theory.
Theory parse_theory(std::string_view text);

// Accepts a bare atom "even(s(z))" or the query form "?- even(s(z)).".
// When a theory is supplied, predicate/functor arities are validated
// against it.
Atom parse_goal(std::string_view text, const Theory* theory = nullptr);

Term parse_term(std::string_view text);

}  // namespace hornplay
