#pragma once

#include "abduce/subst.hpp"

namespace abduce {

/// Most general unifier of t and s, idempotent; nullopt on clash or
/// occurs-check failure.
std::optional<Substitution> mgu(const Term& t, const Term& s);

/// Bindings accumulated during matching. Unlike a Substitution this
/// records identity bindings too; consistency across several match
/// calls depends on them.
using BindingMap = std::map<Variable, Term>;

/// One-way matching: extends `out` so that pattern*out == subject,
/// treating the subject's variables as constants. Returns false and
/// leaves `out` unspecified on failure.
bool match_term(const Term& pattern, const Term& subject, BindingMap& out);

Term apply_bindings(const BindingMap& b, const Term& t);

/// Def of A-compliance: every binding image is abstracted, and abducible
/// variables map to abducible variables.
bool is_a_compliant(const Substitution& s, const Abducibles& abd);

struct UnifyResult {
    enum class Status { Ok, NotUnifiable, NotACompliant } status;
    Substitution subst; // valid when status == Ok

    bool ok() const { return status == Status::Ok; }
};

/// Computes the mgu and repairs bindings of abducible variables to
/// ordinary variables by renaming the ordinary variable away; fails with
/// NotACompliant when an abducible variable is bound to a non-variable
/// (the inference using it must be discarded).
UnifyResult a_compliant_mgu(const Term& t, const Term& s, const Abducibles& abd);

/// Multiset subsumption: some instance of d is a sub-multiset of c.
bool subsumes(const Clause& d, const Clause& c);

/// Equal up to variable renaming (mutual subsumption at equal length).
bool variant_clauses(const Clause& a, const Clause& b);

} // namespace abduce
