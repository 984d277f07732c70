#pragma once

#include "abduce/subst.hpp"

namespace abduce {

/// Replaces every abducible constant occurring in a non-A-literal by a
/// fresh abducible variable x and disjoins the constraint literal
/// x != a. One fresh variable per occurrence. A-literals are untouched.
/// The result is abstracted, V_A-stable and equivalent to the input.
Clause abstract_clause(const Clause& c, const Abducibles& abd);
std::vector<Clause> abstract_set(const std::vector<Clause>& cs, const Abducibles& abd);

/// The substitution sending each variable of Gamma(c) to the <_A-minimal
/// abducible among its constraint literals.
Substitution nu_of(const Clause& c, const Abducibles& abd);

/// A-reduction: if c is an A-clause with nu_of(c) != id, returns c*nu_c
/// (the premise becomes redundant and should be deleted); nullopt
/// otherwise.
std::optional<Clause> a_reduce(const Clause& c, const Abducibles& abd);

struct FlattenResult {
    std::vector<Clause> clauses;            ///< rewritten inputs followed by the definitions
    std::vector<std::string> fresh_constants;
    std::vector<Clause> definitions;        ///< unit clauses d = t'
};

/// Names each ground target (compound subterms innermost-first) with a
/// fresh constant d1, d2, ... and adds the defining unit equation. The
/// replacement is applied everywhere in `clauses`. Throws NonGroundError
/// for a non-ground target. `sig` is consulted and updated so fresh
/// names never collide.
FlattenResult flatten_named_terms(const std::vector<Clause>& clauses, const std::vector<Term>& targets,
                                  Signature& sig);

} // namespace abduce
