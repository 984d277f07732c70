#pragma once

#include "abduce/term.hpp"

namespace abduce {

/// Equational literal t = s or t != s. Equality is unordered: the two
/// sides are stored in a fixed syntactic orientation so that literals
/// differing only by a side swap compare equal.
class Literal {
public:
    Literal(bool positive, Term a, Term b);

    bool positive() const { return positive_; }
    bool negative() const { return !positive_; }
    const Term& lhs() const { return lhs_; }
    const Term& rhs() const { return rhs_; }

    Literal complement() const { return Literal(!positive_, lhs_, rhs_); }

    bool ground() const { return lhs_.ground() && rhs_.ground(); }
    std::size_t weight() const { return lhs_.weight() + rhs_.weight(); }
    std::size_t hash() const;

    bool operator==(const Literal& o) const {
        return positive_ == o.positive_ && lhs_ == o.lhs_ && rhs_ == o.rhs_;
    }
    bool operator!=(const Literal& o) const { return !(*this == o); }
    int cmp(const Literal& o) const;

    /// True for t = t.
    bool trivially_true() const { return positive_ && lhs_ == rhs_; }
    /// True for t != t.
    bool trivially_false() const { return !positive_ && lhs_ == rhs_; }

private:
    bool positive_;
    Term lhs_, rhs_;
};

/// Clause as a multiset of literals, kept sorted by the syntactic literal
/// order. Duplicate literals are preserved: clauses are compared modulo
/// associativity/commutativity of disjunction but not idempotence.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    const std::vector<Literal>& lits() const { return lits_; }
    const Literal& operator[](std::size_t i) const { return lits_[i]; }

    bool ground() const;
    std::size_t weight() const;
    std::size_t hash() const;

    bool operator==(const Clause& o) const { return lits_ == o.lits_; }
    bool operator!=(const Clause& o) const { return !(*this == o); }
    int cmp(const Clause& o) const;

private:
    std::vector<Literal> lits_;
};

std::vector<Variable> variables(const Clause& c);
std::vector<Variable> variables(const Literal& l);

std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

bool is_a_literal(const Literal& l, const Abducibles& abd);
bool is_a_clause(const Clause& c, const Abducibles& abd);
/// x != a with x an abducible variable and a an abducible constant.
bool is_constraint_literal(const Literal& l, const Abducibles& abd);
bool literal_abstracted(const Literal& l, const Abducibles& abd);
/// Every non-abstracted literal is an A-literal.
bool clause_abstracted(const Clause& c, const Abducibles& abd);
/// Every abducible variable of the clause occurs in a constraint literal.
bool clause_va_stable(const Clause& c, const Abducibles& abd);
bool literal_flat(const Literal& l);
bool clause_flat(const Clause& c);

/// delta: the A-literals of c; delta_bar: the rest; gamma: the constraint
/// literals. gamma is a sub-multiset of delta and delta ⊎ delta_bar = c.
struct ClausePartition {
    Clause delta;
    Clause delta_bar;
    Clause gamma;
};
ClausePartition partition_clause(const Clause& c, const Abducibles& abd);

struct ClauseClass {
    bool is_a_clause;
    bool is_abstracted;
    bool is_va_stable;
    bool is_flat;
    bool is_ground;
};
ClauseClass classify_clause(const Clause& c, const Abducibles& abd);

/// The complements of c's literals as unit clauses, deduplicated.
/// Throws NonGroundError if c has variables.
std::vector<Clause> negate_ground_clause(const Clause& c);

/// Contains t = t or a complementary pair of literals.
bool is_syntactic_tautology(const Clause& c);

} // namespace abduce
