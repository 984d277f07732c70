#pragma once

#include "abduce/clause.hpp"

namespace abduce {

struct InputUnsatisfiableError : Error {
    explicit InputUnsatisfiableError(const std::string& what) : Error(what) {}
};

/// Brute-force decision procedures for ground equational clause sets.
/// Used as the independent reference for tests and for entailment-mode
/// minimization; desk-scale only.
namespace oracle {

enum class Sat { Sat, Unsat };

/// Splitting search over clause literals with congruence closure as the
/// theory check. Complete for ground clauses with equality. Throws
/// NonGroundError on variables.
Sat decide_sat(const std::vector<Clause>& clauses);

/// decide_sat(S + not C) == Unsat.
bool entails(const std::vector<Clause>& s, const Clause& c);
/// Entailment from a single clause.
bool entails_clause(const Clause& d, const Clause& c);
/// Valid ground clause (entailed by the empty set).
bool is_valid(const Clause& c);

/// All non-tautological ground A-clauses over `abd` with at most max_len
/// literals (canonical: sides ordered by <_A, no duplicate literals)
/// entailed by s. Throws InputUnsatisfiableError when s is unsatisfiable.
/// When `prime_only` is set the result is reduced to the
/// entailment-minimal subset.
std::vector<Clause> enumerate_a_implicates(const std::vector<Clause>& s, const Abducibles& abd,
                                           std::size_t max_len, bool prime_only = false);

} // namespace oracle

} // namespace abduce
