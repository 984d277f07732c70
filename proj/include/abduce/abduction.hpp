#pragma once

#include "abduce/oracle.hpp"
#include "abduce/saturation.hpp"

namespace abduce {

struct EmptyAbducibleSetError : Error {
    EmptyAbducibleSetError() : Error("abduction requires a nonempty abducible set") {}
};

struct EntailmentModeUnavailableError : Error {
    EntailmentModeUnavailableError()
        : Error("entailment minimization requires saturation and closure to reach a fixpoint") {}
};

enum class MinimizeMode { Auto, Subsumption, Entailment };
enum class Consistency { Consistent, Inconsistent, Unknown };
std::string to_string(Consistency c);

/// All instantiations over A of reflexivity, symmetry and transitivity:
/// |A| + |A|^2 + |A|^3 ground clauses. No congruence axioms are needed,
/// the ground stage only sees constants.
std::vector<Clause> eq_axioms(const Abducibles& abd);

struct ResolutionLimits {
    std::size_t max_clauses = 50000;
    std::size_t max_iterations = 200000;
};

struct ResolutionOutcome {
    std::vector<Clause> clauses;
    bool limit_reached = false;
    std::size_t generated = 0;
    std::size_t kept = 0;
};

/// Closure of ground clauses under binary resolution, with factoring as
/// an eager duplicate-literal merge, removal of t != t literals,
/// tautology deletion and forward/backward subsumption.
ResolutionOutcome resolution_closure(const std::vector<Clause>& input, const ResolutionLimits& limits = {});

/// Drops valid clauses, then strictly subsumed ones; entailment mode
/// instead drops every clause the remaining kept clauses jointly entail
/// (decided by the ground oracle), weakest candidates first, yielding an
/// irredundant set. `mode` must not be Auto here.
std::vector<Clause> minimize_prime(const std::vector<Clause>& clauses, MinimizeMode mode);

/// Saturates axioms + not(implicate) under SP_A and maps the outcome:
/// Saturated -> Consistent, Unsatisfiable -> Inconsistent (the
/// explanation contradicts the axioms alone and is uninformative),
/// LimitReached -> Unknown.
Consistency consistency_filter(const std::vector<Clause>& axioms, const Clause& implicate,
                               const Abducibles& abd, const SaturationLimits& limits = {});

struct ExplainStats {
    std::size_t generated = 0;
    std::size_t kept = 0;
    long long elapsed_ms = 0;
};

struct ImplicateReport {
    SaturationStatus saturation_status = SaturationStatus::Saturated;
    bool closure_limit_reached = false;
    std::vector<Clause> t_infinity;
    /// The resolution closure of T-infinity + Eq_A. Every A-implicate of
    /// the input is entailed by a single clause of this set.
    std::vector<Clause> closure;
    std::size_t closure_size = 0;
    std::vector<Clause> prime_implicates;
    /// Per implicate C the hypothesis set not(C), parallel to
    /// prime_implicates.
    std::vector<std::vector<Literal>> explanations;
    /// Parallel to prime_implicates when the consistency filter ran.
    std::vector<Consistency> consistency;
    bool variable_eligible_seen = false;
    /// False when variable-eligible clauses or limits were hit.
    bool completeness_flag = true;
    MinimizeMode minimize_used = MinimizeMode::Subsumption;
    std::vector<std::string> warnings;
    ExplainStats stats;
    /// Full saturation outcome, for inspection and invariant checks.
    SaturationOutcome saturation;
};

struct ExplainConfig {
    SaturationLimits sat_limits;
    ResolutionLimits res_limits;
    MinimizeMode minimize = MinimizeMode::Auto;
    bool consistency_filter = false;
    bool use_demodulation = true;
    bool log_inferences = true;
    std::function<void(const Clause&)> on_a_clause;
};

/// The full pipeline: abstraction, SP_A saturation, T-infinity
/// extraction, ground resolution closure of T-infinity + Eq_A, prime
/// minimization and the optional consistency filter. Axioms and goal
/// clauses are kept apart so the filter can check hypotheses against the
/// axioms alone.
ImplicateReport explain(const std::vector<Clause>& axioms, const std::vector<Clause>& goals,
                        const Abducibles& abd, const ExplainConfig& cfg = {});

/// Presentation form for ground A-literals and A-clauses: the <_A-larger
/// side is written last and clause literals are sorted by their side
/// ranks. Purely presentational.
std::string canonical_literal_string(const Literal& l, const Abducibles& abd);
std::string canonical_clause_string(const Clause& c, const Abducibles& abd);
/// Hypothesis set of one implicate, literals joined by " & ".
std::string explanation_string(const std::vector<Literal>& hypothesis, const Abducibles& abd);
/// All hypotheses joined by " | " (any one of them refutes the input);
/// multi-literal hypotheses are parenthesized.
std::string combined_explanation_string(const ImplicateReport& report, const Abducibles& abd);

} // namespace abduce
