#pragma once

#include "abduce/clause.hpp"

namespace abduce {

enum class OrderResult { LT, GT, EQ, INCOMPARABLE };

inline OrderResult flip(OrderResult r) {
    if (r == OrderResult::LT) return OrderResult::GT;
    if (r == OrderResult::GT) return OrderResult::LT;
    return r;
}

std::string to_string(OrderResult r);

/// The layered good complete simplification ordering and its abstracted
/// counterpart. Terms are compared by first comparing their A-reduced
/// forms with a lexicographic path ordering whose precedence puts a0
/// below the other constants (ordered by name) and every constant below
/// every function symbol (by arity, then name); ground terms with equal
/// A-reduced forms are tie-broken by <_A on abducibles and
/// lexicographically on arguments.
///
/// On non-ground terms the comparison is a sound decidable
/// approximation: distinct terms with equal A-reduced forms report
/// INCOMPARABLE. The abstracted ordering maps abducible variables to a0
/// first, so EQ there means the gamma0-images coincide.
///
/// Immutable and safe for concurrent use.
class OrderingContext {
public:
    explicit OrderingContext(Abducibles abd) : abd_(std::move(abd)) {}

    const Abducibles& abducibles() const { return abd_; }

    /// t with every abducible constant replaced by a0.
    Term reduce_to_a0(const Term& t) const;
    Literal reduce_to_a0(const Literal& l) const;
    Clause reduce_to_a0(const Clause& c) const;

    /// t with every abducible variable replaced by a0.
    Term apply_gamma0(const Term& t) const;
    Literal apply_gamma0(const Literal& l) const;
    Clause apply_gamma0(const Clause& c) const;

    OrderResult compare_terms(const Term& t, const Term& s) const;
    /// compare_terms on the gamma0-images; requires abstracted inputs.
    OrderResult compare_terms_A(const Term& t, const Term& s) const;

    /// Literal extension of the abstracted ordering: a positive literal
    /// maps to {{t},{s}} and a negative one to {{t,s}}, compared by the
    /// twofold multiset extension.
    OrderResult compare_literals_A(const Literal& a, const Literal& b) const;

    /// Indices of the literals of c that are not strictly below another
    /// literal of c under the abstracted literal ordering.
    std::vector<std::size_t> maximal_literals(const Clause& c) const;

    /// Some maximal literal is x = t with x a variable and x not below t.
    bool is_variable_eligible(const Clause& c) const;

private:
    OrderResult lpo(const Term& s, const Term& t) const;
    bool lpo_gt(const Term& s, const Term& t) const;
    bool prec_gt(const Term& s, const Term& t) const;
    OrderResult ground_tie(const Term& t, const Term& s) const;

    Abducibles abd_;
};

} // namespace abduce
