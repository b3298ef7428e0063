#include "hornplay/parse.hpp"

#include <cctype>

namespace hornplay {

namespace {

bool is_ident_start_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_start_upper(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(std::string_view s) {
        skip_ws();
        if (text_.substr(pos_, s.size()) == s) {
            for (std::size_t i = 0; i < s.size(); ++i) advance();
            return true;
        }
        return false;
    }

    void expect(std::string_view s, const std::string& what) {
        if (!try_consume(s)) fail("expected " + what);
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !is_ident_char(text_[pos_])) fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_),
                         line_, col_);
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const Theory* arity_source)
        : lex_(text) {
        if (arity_source) {
            predicate_arity_ = arity_source->predicate_arity;
            // Functor arities are rebuilt by scanning the theory's clauses.
            for (const Clause& c : arity_source->clauses) {
                scan_functors(c.head);
                for (const Atom& a : c.body) scan_functors(a);
            }
        }
    }

    Theory theory() {
        Theory th;
        while (!lex_.eof()) {
            Clause c = clause();
            c.id = static_cast<int>(th.clauses.size());
            th.clauses.push_back(std::move(c));
        }
        th.predicate_arity = predicate_arity_;
        return th;
    }

    Atom goal() {
        bool query_form = lex_.try_consume("?-");
        Atom a = atom();
        if (query_form)
            lex_.expect(".", "'.' after query goal");
        else
            lex_.try_consume(".");
        if (!lex_.eof()) lex_.fail("unexpected trailing input");
        return a;
    }

    Term bare_term() {
        Term t = term();
        if (!lex_.eof()) lex_.fail("unexpected trailing input");
        return t;
    }

private:
    Clause clause() {
        Clause c;
        c.head = atom();
        if (lex_.try_consume(":-")) {
            c.body.push_back(atom());
            while (lex_.try_consume(",")) c.body.push_back(atom());
        }
        lex_.expect(".", "'.' at end of clause");
        return c;
    }

    Atom atom() {
        int line = lex_.line(), col = lex_.col();
        char c = lex_.peek();
        if (!is_ident_start_lower(c)) lex_.fail("expected predicate symbol");
        std::string name = lex_.ident();
        Atom a;
        a.predicate = std::move(name);
        if (lex_.try_consume("(")) {
            a.args.push_back(term());
            while (lex_.try_consume(",")) a.args.push_back(term());
            lex_.expect(")", "')' closing argument list");
        }
        check_arity(predicate_arity_, a.predicate, static_cast<int>(a.args.size()), line, col);
        return a;
    }

    Term term() {
        int line = lex_.line(), col = lex_.col();
        char c = lex_.peek();
        if (is_ident_start_upper(c)) return Term::variable(lex_.ident());
        if (!is_ident_start_lower(c)) lex_.fail("expected term");
        std::string name = lex_.ident();
        std::vector<Term> args;
        if (lex_.try_consume("(")) {
            args.push_back(term());
            while (lex_.try_consume(",")) args.push_back(term());
            lex_.expect(")", "')' closing argument list");
        }
        check_arity(functor_arity_, name, static_cast<int>(args.size()), line, col);
        return Term::compound(std::move(name), std::move(args));
    }

    void check_arity(std::map<std::string, int>& table, const std::string& sym, int arity,
                     int line, int col) {
        auto [it, inserted] = table.emplace(sym, arity);
        if (!inserted && it->second != arity)
            throw ArityError(sym, arity, it->second, line, col);
    }

    void scan_functors(const Atom& a) {
        for (const Term& t : a.args) scan_functors_term(t);
    }
    void scan_functors_term(const Term& t) {
        if (t.var) return;
        functor_arity_.emplace(t.sym, static_cast<int>(t.args.size()));
        for (const Term& a : t.args) scan_functors_term(a);
    }

    Lexer lex_;
    std::map<std::string, int> predicate_arity_;
    std::map<std::string, int> functor_arity_;
};

}  // namespace

Theory parse_theory(std::string_view text) {
    return Parser(text, nullptr).theory();
}

Atom parse_goal(std::string_view text, const Theory* theory) {
    return Parser(text, theory).goal();
}

Term parse_term(std::string_view text) {
    return Parser(text, nullptr).bare_term();
}

}  // namespace hornplay
