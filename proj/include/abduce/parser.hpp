#pragma once

#include "abduce/clause.hpp"

namespace abduce {

enum class ParseErrorKind { Syntax, Arity, UnknownDirective };

/// Positioned diagnostic; line and column are 1-based.
struct ParseError : Error {
    ParseError(ParseErrorKind k, int line_, int col_, const std::string& detail_);
    ParseErrorKind kind;
    int line;
    int col;
    std::string detail;
};

/// A parsed problem: declarations plus axiom/goal clauses, before
/// flattening is applied.
struct ProblemFile {
    Signature signature;
    std::vector<std::string> abducibles; ///< declaration order
    std::optional<std::vector<std::string>> order; ///< explicit <_A chain, if any
    std::vector<Clause> axioms;
    std::vector<Clause> goals;
    std::vector<Term> flatten_targets;

    /// <_A: the order directive if present, else declaration order.
    Abducibles make_abducibles() const;

    bool operator==(const ProblemFile& o) const {
        return abducibles == o.abducibles && order == o.order && axioms == o.axioms && goals == o.goals &&
               flatten_targets == o.flatten_targets && signature.symbols() == o.signature.symbols();
    }
};

/// Grammar: statements terminated by '.'; `abducible a, b.`;
/// `order a < b.`; `axiom <clause>.`; `goal <clause>.`;
/// `flatten <ground-term>.`; clause literals joined by `|`; literals are
/// `term = term` or `term != term`; uppercase-initial identifiers are
/// variables; `%` starts a line comment.
ProblemFile parse_problem(const std::string& text);

/// Parses a single clause (the --implicate argument), checking arities
/// against `sig`.
Clause parse_clause_text(const std::string& text, Signature& sig);

/// Serialization that reparses to a structurally identical ProblemFile.
std::string print_problem(const ProblemFile& pf);

} // namespace abduce
