#include "abduce/abduction.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>
#include <unordered_map>

namespace abduce {

std::string to_string(Consistency c) {
    switch (c) {
    case Consistency::Consistent: return "consistent";
    case Consistency::Inconsistent: return "inconsistent";
    case Consistency::Unknown: return "unknown";
    }
    return "?";
}

std::vector<Clause> eq_axioms(const Abducibles& abd) {
    std::vector<Clause> out;
    const auto& names = abd.ordered();
    auto c = [](const std::string& n) { return Term::constant(n); };
    for (const auto& a : names) out.push_back(Clause({Literal(true, c(a), c(a))}));
    for (const auto& a : names)
        for (const auto& b : names)
            out.push_back(Clause({Literal(false, c(a), c(b)), Literal(true, c(b), c(a))}));
    for (const auto& a : names)
        for (const auto& b : names)
            for (const auto& d : names)
                out.push_back(Clause(
                    {Literal(false, c(a), c(b)), Literal(false, c(b), c(d)), Literal(true, c(a), c(d))}));
    return out;
}

namespace {

/// Removes t != t literals (resolution against reflexivity) and merges
/// duplicates (factoring); the result subsumes the input.
Clause r_simplify(const Clause& c) {
    std::vector<Literal> lits;
    for (const auto& l : c.lits()) {
        if (l.trivially_false()) continue;
        if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
    }
    return Clause(std::move(lits));
}

struct ClauseHash {
    std::size_t operator()(const Clause& c) const { return c.hash(); }
};

} // namespace

ResolutionOutcome resolution_closure(const std::vector<Clause>& input, const ResolutionLimits& limits) {
    ResolutionOutcome out;
    struct Entry {
        Clause clause;
        bool active = false;
        bool deleted = false;
    };
    std::vector<Entry> entries;
    std::unordered_map<Clause, int, ClauseHash> known;
    std::set<std::pair<std::size_t, int>> passive;
    bool found_empty = false;

    auto add = [&](const Clause& raw) {
        Clause c = r_simplify(raw);
        if (c.empty()) {
            found_empty = true;
        }
        if (is_syntactic_tautology(c)) return;
        if (known.count(c)) return;
        int id = static_cast<int>(entries.size());
        known.emplace(c, id);
        entries.push_back({c, false, false});
        passive.emplace(c.weight(), id);
    };

    for (const auto& c : input) {
        if (!c.ground()) throw NonGroundError("resolution closure requires ground clauses: " + to_string(c));
        add(c);
    }

    std::size_t iterations = 0;
    while (!passive.empty()) {
        if (iterations++ >= limits.max_iterations || out.kept >= limits.max_clauses) {
            out.limit_reached = true;
            break;
        }
        int gid = passive.begin()->second;
        passive.erase(passive.begin());
        const Clause given = entries[static_cast<std::size_t>(gid)].clause;
        bool redundant = false;
        for (const auto& e : entries) {
            if (!e.active || e.deleted) continue;
            if (subsumes(e.clause, given)) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            entries[static_cast<std::size_t>(gid)].deleted = true;
            continue;
        }
        entries[static_cast<std::size_t>(gid)].active = true;
        ++out.kept;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            Entry& e = entries[i];
            if (!e.active || e.deleted || static_cast<int>(i) == gid) continue;
            if (subsumes(given, e.clause)) e.deleted = true;
        }
        // binary resolution of the given clause against the active set
        std::vector<Clause> act;
        for (const auto& e : entries)
            if (e.active && !e.deleted) act.push_back(e.clause);
        for (const Clause& other : act) {
            for (std::size_t i = 0; i < given.size(); ++i) {
                for (std::size_t j = 0; j < other.size(); ++j) {
                    const Literal& li = given[i];
                    const Literal& lj = other[j];
                    if (li.positive() == lj.positive()) continue;
                    if (li.lhs() != lj.lhs() || li.rhs() != lj.rhs()) continue;
                    std::vector<Literal> lits;
                    for (std::size_t k = 0; k < given.size(); ++k)
                        if (k != i) lits.push_back(given[k]);
                    for (std::size_t k = 0; k < other.size(); ++k)
                        if (k != j) lits.push_back(other[k]);
                    ++out.generated;
                    add(Clause(std::move(lits)));
                }
            }
            if (found_empty) break;
        }
        if (found_empty) break;
    }
    for (const auto& e : entries)
        if (e.active && !e.deleted) out.clauses.push_back(e.clause);
    if (found_empty) out.clauses.push_back(Clause{});
    std::sort(out.clauses.begin(), out.clauses.end(),
              [](const Clause& a, const Clause& b) { return a.cmp(b) < 0; });
    return out;
}

std::vector<Clause> minimize_prime(const std::vector<Clause>& clauses, MinimizeMode mode) {
    if (mode == MinimizeMode::Auto) throw Error("minimize_prime needs a resolved mode");
    std::vector<Clause> cands;
    for (const auto& raw : clauses) {
        Clause c = r_simplify(raw);
        if (oracle::is_valid(c)) continue;
        if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
    }
    std::sort(cands.begin(), cands.end(), [](const Clause& a, const Clause& b) { return a.cmp(b) < 0; });
    if (mode == MinimizeMode::Subsumption) {
        std::vector<Clause> kept;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < cands.size() && !drop; ++j)
                if (i != j && subsumes(cands[j], cands[i]) && !subsumes(cands[i], cands[j])) drop = true;
            if (!drop) kept.push_back(cands[i]);
        }
        return kept;
    }
    // entailment mode: greedy cover, strongest candidates first, then a
    // backward pass that drops anything the others still entail
    std::vector<Clause> kept;
    for (const auto& c : cands)
        if (!oracle::entails(kept, c)) kept.push_back(c);
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<Clause> rest;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) rest.push_back(kept[j]);
        if (oracle::entails(rest, kept[i])) kept = std::move(rest);
    }
    return kept;
}

namespace {

// (smaller rank, larger rank) of a ground literal; non-abducible sides
// keep the stored orientation.
std::pair<Term, Term> oriented_sides(const Literal& l, const Abducibles& abd) {
    Term a = l.lhs(), b = l.rhs();
    int ra = a.is_const() ? abd.rank(a.name()) : -1;
    int rb = b.is_const() ? abd.rank(b.name()) : -1;
    if (ra >= 0 && rb >= 0 && ra > rb) std::swap(a, b);
    return {a, b};
}

using LiteralKey = std::tuple<int, int, int>;

LiteralKey literal_key(const Literal& l, const Abducibles& abd) {
    auto [a, b] = oriented_sides(l, abd);
    return {abd.rank(a.name()), abd.rank(b.name()), l.positive() ? 0 : 1};
}

std::vector<LiteralKey> clause_key(const Clause& c, const Abducibles& abd) {
    std::vector<LiteralKey> key;
    key.reserve(c.size());
    for (const auto& l : c.lits()) key.push_back(literal_key(l, abd));
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

Consistency consistency_filter(const std::vector<Clause>& axioms, const Clause& implicate,
                               const Abducibles& abd, const SaturationLimits& limits) {
    std::vector<Clause> s = abstract_set(axioms, abd);
    for (auto& unit : negate_ground_clause(implicate)) s.push_back(std::move(unit));
    OrderingContext ctx(abd);
    SaturationConfig cfg;
    cfg.limits = limits;
    cfg.log_inferences = false;
    SaturationOutcome sat = saturate(s, ctx, cfg);
    switch (sat.status) {
    case SaturationStatus::Saturated: return Consistency::Consistent;
    case SaturationStatus::Unsatisfiable: return Consistency::Inconsistent;
    case SaturationStatus::LimitReached: return Consistency::Unknown;
    }
    return Consistency::Unknown;
}

ImplicateReport explain(const std::vector<Clause>& axioms, const std::vector<Clause>& goals,
                        const Abducibles& abd, const ExplainConfig& cfg) {
    if (abd.empty()) throw EmptyAbducibleSetError{};
    auto start = std::chrono::steady_clock::now();
    ImplicateReport report;

    std::vector<Clause> s = axioms;
    s.insert(s.end(), goals.begin(), goals.end());
    std::vector<Clause> abstracted = abstract_set(s, abd);

    OrderingContext ctx(abd);
    SaturationConfig scfg;
    scfg.limits = cfg.sat_limits;
    scfg.use_demodulation = cfg.use_demodulation;
    scfg.log_inferences = cfg.log_inferences;
    scfg.on_a_clause = cfg.on_a_clause;
    report.saturation = saturate(abstracted, ctx, scfg);
    report.saturation_status = report.saturation.status;
    report.variable_eligible_seen = report.saturation.variable_eligible_seen;
    report.warnings = report.saturation.warnings;
    report.stats.generated = report.saturation.stats.generated;
    report.stats.kept = report.saturation.stats.kept;

    auto finish = [&]() {
        report.completeness_flag = report.saturation_status == SaturationStatus::Saturated &&
                                   !report.closure_limit_reached && !report.variable_eligible_seen;
        auto end = std::chrono::steady_clock::now();
        report.stats.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        return report;
    };

    if (report.saturation_status == SaturationStatus::Unsatisfiable) {
        // the input set itself is unsatisfiable; there is nothing to explain
        return finish();
    }

    report.t_infinity = extract_t_infinity(report.saturation, abd);
    std::vector<Clause> r_input = report.t_infinity;
    for (auto& c : eq_axioms(abd)) r_input.push_back(std::move(c));
    ResolutionOutcome closure = resolution_closure(r_input, cfg.res_limits);
    report.closure = closure.clauses;
    report.closure_limit_reached = closure.limit_reached;
    report.closure_size = closure.clauses.size();
    report.stats.generated += closure.generated;
    report.stats.kept += closure.kept;
    if (closure.limit_reached) report.warnings.push_back("closure_limit_reached");

    bool fixpoint =
        report.saturation_status == SaturationStatus::Saturated && !closure.limit_reached;
    MinimizeMode mode = cfg.minimize;
    if (mode == MinimizeMode::Auto) mode = fixpoint ? MinimizeMode::Entailment : MinimizeMode::Subsumption;
    if (mode == MinimizeMode::Entailment && !fixpoint) throw EntailmentModeUnavailableError{};
    report.minimize_used = mode;
    report.prime_implicates = minimize_prime(closure.clauses, mode);
    std::sort(report.prime_implicates.begin(), report.prime_implicates.end(),
              [&](const Clause& x, const Clause& y) {
                  auto kx = clause_key(x, abd), ky = clause_key(y, abd);
                  if (kx != ky) return kx < ky;
                  return x.cmp(y) < 0;
              });

    for (const auto& c : report.prime_implicates) {
        std::vector<Literal> hypothesis;
        for (const auto& unit : negate_ground_clause(c)) hypothesis.push_back(unit[0]);
        report.explanations.push_back(std::move(hypothesis));
    }
    if (cfg.consistency_filter) {
        for (const auto& c : report.prime_implicates)
            report.consistency.push_back(consistency_filter(axioms, c, abd, cfg.sat_limits));
    }
    return finish();
}


std::string canonical_literal_string(const Literal& l, const Abducibles& abd) {
    auto [a, b] = oriented_sides(l, abd);
    return to_string(a) + (l.positive() ? " = " : " != ") + to_string(b);
}

std::string canonical_clause_string(const Clause& c, const Abducibles& abd) {
    if (c.empty()) return "false";
    std::vector<Literal> lits(c.lits());
    auto key = [&](const Literal& l) {
        auto [a, b] = oriented_sides(l, abd);
        return std::make_tuple(abd.rank(a.name()), abd.rank(b.name()), l.positive() ? 0 : 1);
    };
    std::stable_sort(lits.begin(), lits.end(),
                     [&](const Literal& x, const Literal& y) { return key(x) < key(y); });
    std::string out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i) out += " | ";
        out += canonical_literal_string(lits[i], abd);
    }
    return out;
}

std::string explanation_string(const std::vector<Literal>& hypothesis, const Abducibles& abd) {
    std::string out;
    for (std::size_t i = 0; i < hypothesis.size(); ++i) {
        if (i) out += " & ";
        out += canonical_literal_string(hypothesis[i], abd);
    }
    return out;
}

std::string combined_explanation_string(const ImplicateReport& report, const Abducibles& abd) {
    std::string out;
    for (std::size_t i = 0; i < report.explanations.size(); ++i) {
        if (i) out += " | ";
        const auto& hyp = report.explanations[i];
        if (hyp.size() > 1)
            out += "(" + explanation_string(hyp, abd) + ")";
        else
            out += explanation_string(hyp, abd);
    }
    return out;
}

} // namespace abduce
