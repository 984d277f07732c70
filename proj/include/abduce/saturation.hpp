#pragma once

#include "abduce/abstraction.hpp"
#include "abduce/ordering.hpp"
#include "abduce/rename.hpp"
#include "abduce/unify.hpp"

#include <functional>

namespace abduce {

struct SaturationLimits {
    std::size_t max_clauses = 50000;
    std::size_t max_iterations = 200000;
    std::size_t max_weight = 0; ///< 0 disables the weight cutoff
};

enum class Rule {
    Superposition,
    Paramodulation,
    Reflection,
    EqFactoring,
    AReduction,
    Merge,
    /// Removal of a disequation x != t whose variable occurs nowhere
    /// else in the clause (instantiating x to t shows equivalence).
    DropDiseq,
    /// Two abducible variables constrained by the same abducible are
    /// identified (the second is renamed to the first).
    ConstraintMerge,
};
std::string to_string(Rule r);

struct Inference {
    Rule rule;
    std::vector<Clause> premises; ///< as used, i.e. after renaming apart
    Substitution subst;
    Clause conclusion;
};

struct SaturationConfig {
    SaturationLimits limits;
    /// Standard SP: mgus need not be A-compliant. The orderings are
    /// unchanged (gamma0 is the identity on standard clauses).
    bool plain_sp = false;
    bool use_demodulation = true;
    /// Weight picks per age pick; age picks keep the loop fair.
    int pick_ratio = 4;
    bool log_inferences = true;
    /// Called when a ground A-clause is activated (streaming output).
    std::function<void(const Clause&)> on_a_clause;
};

enum class SaturationStatus { Saturated, Unsatisfiable, LimitReached };
std::string to_string(SaturationStatus s);

struct SaturationStats {
    std::size_t generated = 0;
    std::size_t kept = 0;
    std::size_t iterations = 0;
    std::size_t deleted_redundant = 0;
};

struct SaturationOutcome {
    SaturationStatus status = SaturationStatus::Saturated;
    std::vector<Clause> final_clauses;
    std::vector<Clause> t_infinity; ///< ground A-clauses of the final set
    bool variable_eligible_seen = false;
    std::vector<std::string> warnings;
    /// Violations of the structural invariants every run must maintain:
    /// kept clauses abstracted and V_A-stable, and binary inferences with
    /// an A-clause premise have both premises A-clauses.
    std::vector<std::string> invariant_violations;
    std::vector<Inference> log;
    /// Clauses discarded as redundant, with the deciding check.
    std::vector<std::pair<Clause, std::string>> deletions;
    SaturationStats stats;
};

/// Generating rules. For binary rules the second premise is renamed
/// apart internally; the renamed form is recorded in the inference.
/// `c1` is the clause rewritten into (C | l[u'] ~ r), `c2` provides the
/// equation (D | u = t). Inferences whose mgu is not A-compliant are
/// skipped unless `require_compliant` is false.
std::vector<Inference> superposition(const Clause& c1, const Clause& c2, const OrderingContext& ctx,
                                     bool require_compliant = true);
std::vector<Inference> paramodulation(const Clause& c1, const Clause& c2, const OrderingContext& ctx,
                                      bool require_compliant = true);
std::vector<Inference> reflection(const Clause& c, const OrderingContext& ctx, bool require_compliant = true);
std::vector<Inference> equational_factoring(const Clause& c, const OrderingContext& ctx,
                                            bool require_compliant = true);

/// Conservative decidable approximation of A-redundancy: tautology,
/// subsumption by an active clause, A-clause whose nu-image is present,
/// or demodulation (by unit equations without abducible variables,
/// oriented by the abstracted ordering) into an already redundant clause.
bool is_redundant(const Clause& c, const std::vector<Clause>& active, const OrderingContext& ctx,
                  bool use_demodulation = true);

/// Given-clause saturation under SP_A with the A-reduction contraction
/// rule and the redundancy checks above.
SaturationOutcome saturate(const std::vector<Clause>& input, const OrderingContext& ctx,
                           const SaturationConfig& cfg = {});

/// The A-clauses of the final set; they are ground whenever the run was
/// healthy (non-ground A-clauses are A-reduced away).
std::vector<Clause> extract_t_infinity(const SaturationOutcome& out, const Abducibles& abd);

} // namespace abduce
