#include "abduce/parser.hpp"

#include <cctype>

namespace abduce {

namespace {

std::string kind_name(ParseErrorKind k) {
    switch (k) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::Arity: return "arity mismatch";
    case ParseErrorKind::UnknownDirective: return "unknown directive";
    }
    return "error";
}

} // namespace

ParseError::ParseError(ParseErrorKind k, int line_, int col_, const std::string& detail_)
    : Error(kind_name(k) + " at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + detail_),
      kind(k), line(line_), col(col_), detail(detail_) {}

namespace {

enum class Tok { Ident, Comma, Dot, Pipe, Eq, Neq, LParen, RParen, Less, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        int l = line_, c = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", l, c};
        char ch = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                advance();
            }
            return {Tok::Ident, id, l, c};
        }
        switch (ch) {
        case ',': advance(); return {Tok::Comma, ",", l, c};
        case '.': advance(); return {Tok::Dot, ".", l, c};
        case '|': advance(); return {Tok::Pipe, "|", l, c};
        case '(': advance(); return {Tok::LParen, "(", l, c};
        case ')': advance(); return {Tok::RParen, ")", l, c};
        case '<': advance(); return {Tok::Less, "<", l, c};
        case '=': advance(); return {Tok::Eq, "=", l, c};
        case '!':
            advance();
            if (pos_ < text_.size() && text_[pos_] == '=') {
                advance();
                return {Tok::Neq, "!=", l, c};
            }
            throw ParseError(ParseErrorKind::Syntax, l, c, "expected '=' after '!'");
        default:
            throw ParseError(ParseErrorKind::Syntax, l, c, std::string("unexpected character '") + ch + "'");
        }
    }

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

    void skip_ws() {
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { shift(); }

    ProblemFile parse_file() {
        ProblemFile pf;
        int order_line = 0, order_col = 0;
        while (cur_.kind != Tok::End) {
            Token head = expect(Tok::Ident, "a directive (abducible, order, axiom, goal or flatten)");
            if (head.text == "abducible") {
                parse_abducibles(pf);
            } else if (head.text == "order") {
                if (pf.order)
                    throw ParseError(ParseErrorKind::Syntax, head.line, head.col,
                                     "duplicate order directive");
                order_line = head.line;
                order_col = head.col;
                parse_order(pf);
            } else if (head.text == "axiom") {
                pf.axioms.push_back(parse_clause(pf.signature));
                expect(Tok::Dot, "'.'");
            } else if (head.text == "goal") {
                pf.goals.push_back(parse_clause(pf.signature));
                expect(Tok::Dot, "'.'");
            } else if (head.text == "flatten") {
                Token at = cur_;
                Term t = parse_term(pf.signature);
                if (!t.ground())
                    throw ParseError(ParseErrorKind::Syntax, at.line, at.col,
                                     "flatten target must be ground");
                pf.flatten_targets.push_back(std::move(t));
                expect(Tok::Dot, "'.'");
            } else {
                throw ParseError(ParseErrorKind::UnknownDirective, head.line, head.col,
                                 "'" + head.text + "'");
            }
        }
        validate(pf, order_line, order_col);
        return pf;
    }

    Clause parse_clause_only(Signature& sig) {
        Clause c = parse_clause(sig);
        if (cur_.kind != Tok::End)
            throw ParseError(ParseErrorKind::Syntax, cur_.line, cur_.col, "trailing input after clause");
        return c;
    }

private:
    void shift() { cur_ = lex_.next(); }

    Token expect(Tok k, const std::string& what) {
        if (cur_.kind != k)
            throw ParseError(ParseErrorKind::Syntax, cur_.line, cur_.col,
                             "expected " + what + ", found '" + (cur_.kind == Tok::End ? "end of input" : cur_.text) + "'");
        Token t = cur_;
        shift();
        return t;
    }

    static bool is_variable_name(const std::string& s) {
        return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
    }

    void parse_abducibles(ProblemFile& pf) {
        for (;;) {
            Token id = expect(Tok::Ident, "a constant");
            if (is_variable_name(id.text))
                throw ParseError(ParseErrorKind::Syntax, id.line, id.col,
                                 "abducibles must be constants, not variables");
            if (auto prev = pf.signature.use(id.text, 0))
                throw ParseError(ParseErrorKind::Arity, id.line, id.col,
                                 "'" + id.text + "' is declared abducible but used with arity " +
                                     std::to_string(*prev));
            pf.abducibles.push_back(id.text);
            if (cur_.kind == Tok::Comma) {
                shift();
                continue;
            }
            expect(Tok::Dot, "',' or '.'");
            return;
        }
    }

    void parse_order(ProblemFile& pf) {
        std::vector<std::string> names;
        for (;;) {
            Token id = expect(Tok::Ident, "a constant");
            names.push_back(id.text);
            if (cur_.kind == Tok::Less) {
                shift();
                continue;
            }
            expect(Tok::Dot, "'<' or '.'");
            break;
        }
        pf.order = std::move(names);
    }

    Clause parse_clause(Signature& sig) {
        std::vector<Literal> lits;
        for (;;) {
            lits.push_back(parse_literal(sig));
            if (cur_.kind == Tok::Pipe) {
                shift();
                continue;
            }
            break;
        }
        return Clause(std::move(lits));
    }

    Literal parse_literal(Signature& sig) {
        Term lhs = parse_term(sig);
        bool positive;
        if (cur_.kind == Tok::Eq) {
            positive = true;
        } else if (cur_.kind == Tok::Neq) {
            positive = false;
        } else {
            throw ParseError(ParseErrorKind::Syntax, cur_.line, cur_.col,
                             "expected '=' or '!=', found '" + (cur_.kind == Tok::End ? "end of input" : cur_.text) + "'");
        }
        shift();
        Term rhs = parse_term(sig);
        return Literal(positive, std::move(lhs), std::move(rhs));
    }

    Term parse_term(Signature& sig) {
        Token id = expect(Tok::Ident, "a term");
        if (is_variable_name(id.text)) {
            if (cur_.kind == Tok::LParen)
                throw ParseError(ParseErrorKind::Syntax, cur_.line, cur_.col,
                                 "variables cannot take arguments");
            return Term::var(id.text, VarKind::Ordinary);
        }
        std::vector<Term> args;
        if (cur_.kind == Tok::LParen) {
            shift();
            for (;;) {
                args.push_back(parse_term(sig));
                if (cur_.kind == Tok::Comma) {
                    shift();
                    continue;
                }
                expect(Tok::RParen, "',' or ')'");
                break;
            }
        }
        if (auto prev = sig.use(id.text, args.size()))
            throw ParseError(ParseErrorKind::Arity, id.line, id.col,
                             "'" + id.text + "' used with arity " + std::to_string(args.size()) +
                                 " but previously with arity " + std::to_string(*prev));
        return Term::app(id.text, std::move(args));
    }

    void validate(ProblemFile& pf, int order_line, int order_col) {
        if (pf.order) {
            std::vector<std::string> sorted_order = *pf.order;
            std::vector<std::string> sorted_abd = pf.abducibles;
            std::sort(sorted_order.begin(), sorted_order.end());
            std::sort(sorted_abd.begin(), sorted_abd.end());
            if (sorted_order != sorted_abd)
                throw ParseError(ParseErrorKind::Syntax, order_line, order_col,
                                 "order directive must list each abducible exactly once");
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, "", 0, 0};
};

} // namespace

Abducibles ProblemFile::make_abducibles() const {
    return Abducibles(order ? *order : abducibles);
}

ProblemFile parse_problem(const std::string& text) { return Parser(text).parse_file(); }

Clause parse_clause_text(const std::string& text, Signature& sig) {
    return Parser(text).parse_clause_only(sig);
}

std::string print_problem(const ProblemFile& pf) {
    std::string out;
    if (!pf.abducibles.empty()) {
        out += "abducible ";
        for (std::size_t i = 0; i < pf.abducibles.size(); ++i) {
            if (i) out += ", ";
            out += pf.abducibles[i];
        }
        out += ".\n";
    }
    if (pf.order) {
        out += "order ";
        for (std::size_t i = 0; i < pf.order->size(); ++i) {
            if (i) out += " < ";
            out += (*pf.order)[i];
        }
        out += ".\n";
    }
    for (const auto& c : pf.axioms) out += "axiom " + to_string(c) + ".\n";
    for (const auto& c : pf.goals) out += "goal " + to_string(c) + ".\n";
    for (const auto& t : pf.flatten_targets) out += "flatten " + to_string(t) + ".\n";
    return out;
}

} // namespace abduce
