#include "abduce/saturation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace abduce {

std::string to_string(Rule r) {
    switch (r) {
    case Rule::Superposition: return "superposition";
    case Rule::Paramodulation: return "paramodulation";
    case Rule::Reflection: return "reflection";
    case Rule::EqFactoring: return "equational_factoring";
    case Rule::AReduction: return "a_reduction";
    case Rule::Merge: return "merge";
    case Rule::DropDiseq: return "drop_diseq";
    case Rule::ConstraintMerge: return "constraint_merge";
    }
    return "?";
}

std::string to_string(SaturationStatus s) {
    switch (s) {
    case SaturationStatus::Saturated: return "saturated";
    case SaturationStatus::Unsatisfiable: return "unsatisfiable";
    case SaturationStatus::LimitReached: return "limit_reached";
    }
    return "?";
}

namespace {

bool not_lt(OrderResult r) { return r != OrderResult::LT; }

std::optional<Substitution> rule_mgu(const Term& a, const Term& b, const OrderingContext& ctx,
                                     bool require_compliant) {
    if (!require_compliant) return mgu(a, b);
    UnifyResult r = a_compliant_mgu(a, b, ctx.abducibles());
    if (!r.ok()) return std::nullopt;
    return std::move(r.subst);
}

std::vector<Literal> lits_without(const Clause& c, std::size_t skip) {
    std::vector<Literal> out;
    out.reserve(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip) out.push_back(c[i]);
    return out;
}

std::vector<Literal> lits_without2(const Clause& c, std::size_t skip1, std::size_t skip2) {
    std::vector<Literal> out;
    out.reserve(c.size() - 2);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip1 && i != skip2) out.push_back(c[i]);
    return out;
}

// (ii)/(iv)/(v)/(vi)-style checks: the instantiated literal must not be
// strictly below any instantiated side literal.
bool not_below_all(const Literal& lit, const std::vector<Literal>& rest, const Substitution& sigma,
                   const OrderingContext& ctx) {
    Literal ls = sigma.apply(lit);
    for (const auto& m : rest)
        if (!not_lt(ctx.compare_literals_A(ls, sigma.apply(m)))) return false;
    return true;
}

std::vector<Inference> superpose_into(const Clause& c1, const Clause& c2, const OrderingContext& ctx,
                                      bool positive_target, bool require_compliant) {
    std::vector<Inference> out;
    Clause from = rename_apart(c2, c1);
    Rule rule = positive_target ? Rule::Superposition : Rule::Paramodulation;
    for (std::size_t ti = 0; ti < c1.size(); ++ti) {
        const Literal& target = c1[ti];
        if (target.positive() != positive_target) continue;
        std::vector<Literal> c_rest = lits_without(c1, ti);
        for (int tside = 0; tside < 2; ++tside) {
            Term l = tside == 0 ? target.lhs() : target.rhs();
            Term r = tside == 0 ? target.rhs() : target.lhs();
            for (const auto& [path, red] : positions(l)) {
                if (red.is_var()) continue;
                for (std::size_t ei = 0; ei < from.size(); ++ei) {
                    const Literal& eq = from[ei];
                    if (!eq.positive()) continue;
                    std::vector<Literal> d_rest = lits_without(from, ei);
                    for (int eside = 0; eside < 2; ++eside) {
                        Term u = eside == 0 ? eq.lhs() : eq.rhs();
                        Term t = eside == 0 ? eq.rhs() : eq.lhs();
                        auto sigma = rule_mgu(u, red, ctx, require_compliant);
                        if (!sigma) continue;
                        // (i) u.sigma not below t.sigma
                        if (!not_lt(ctx.compare_terms_A(sigma->apply(u), sigma->apply(t)))) continue;
                        // (iii) l[u'].sigma not below r.sigma
                        if (!not_lt(ctx.compare_terms_A(sigma->apply(l), sigma->apply(r)))) continue;
                        // (ii) the equation is not below any literal of D
                        if (!not_below_all(Literal(true, u, t), d_rest, *sigma, ctx)) continue;
                        // (iv) the rewritten literal is not below any literal of C
                        if (!not_below_all(Literal(positive_target, l, r), c_rest, *sigma, ctx)) continue;
                        std::vector<Literal> lits;
                        lits.reserve(c1.size() + from.size() - 1);
                        Literal rewritten(positive_target, replace_at(l, path, t), r);
                        lits.push_back(sigma->apply(rewritten));
                        for (const auto& m : c_rest) lits.push_back(sigma->apply(m));
                        for (const auto& m : d_rest) lits.push_back(sigma->apply(m));
                        out.push_back(Inference{rule, {c1, from}, *sigma, Clause(std::move(lits))});
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<Inference> superposition(const Clause& c1, const Clause& c2, const OrderingContext& ctx,
                                     bool require_compliant) {
    return superpose_into(c1, c2, ctx, true, require_compliant);
}

std::vector<Inference> paramodulation(const Clause& c1, const Clause& c2, const OrderingContext& ctx,
                                      bool require_compliant) {
    return superpose_into(c1, c2, ctx, false, require_compliant);
}

std::vector<Inference> reflection(const Clause& c, const OrderingContext& ctx, bool require_compliant) {
    std::vector<Inference> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Literal& neg = c[i];
        if (neg.positive()) continue;
        auto sigma = rule_mgu(neg.lhs(), neg.rhs(), ctx, require_compliant);
        if (!sigma) continue;
        std::vector<Literal> rest = lits_without(c, i);
        // (v) the reflected atom is not below any remaining literal
        if (!not_below_all(Literal(true, neg.lhs(), neg.rhs()), rest, *sigma, ctx)) continue;
        std::vector<Literal> lits;
        lits.reserve(rest.size());
        for (const auto& m : rest) lits.push_back(sigma->apply(m));
        out.push_back(Inference{Rule::Reflection, {c}, *sigma, Clause(std::move(lits))});
    }
    return out;
}

std::vector<Inference> equational_factoring(const Clause& c, const OrderingContext& ctx,
                                            bool require_compliant) {
    std::vector<Inference> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].positive()) continue;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i == j || !c[j].positive()) continue;
            std::vector<Literal> rest = lits_without2(c, i, j);
            for (int si = 0; si < 2; ++si) {
                Term u = si == 0 ? c[i].lhs() : c[i].rhs();
                Term t = si == 0 ? c[i].rhs() : c[i].lhs();
                for (int sj = 0; sj < 2; ++sj) {
                    Term u2 = sj == 0 ? c[j].lhs() : c[j].rhs();
                    Term t2 = sj == 0 ? c[j].rhs() : c[j].lhs();
                    auto sigma = rule_mgu(u, u2, ctx, require_compliant);
                    if (!sigma) continue;
                    // (i) u.sigma not below t.sigma
                    if (!not_lt(ctx.compare_terms_A(sigma->apply(u), sigma->apply(t)))) continue;
                    // (vi) u = t not below u' = t' nor any literal of C
                    std::vector<Literal> guard = rest;
                    guard.emplace_back(true, u2, t2);
                    if (!not_below_all(Literal(true, u, t), guard, *sigma, ctx)) continue;
                    std::vector<Literal> lits;
                    lits.reserve(rest.size() + 2);
                    lits.push_back(sigma->apply(Literal(false, t, t2)));
                    lits.push_back(sigma->apply(Literal(true, u, t2)));
                    for (const auto& m : rest) lits.push_back(sigma->apply(m));
                    out.push_back(Inference{Rule::EqFactoring, {c}, *sigma, Clause(std::move(lits))});
                }
            }
        }
    }
    return out;
}

namespace {

struct DemodRule {
    Term from, to;
};

std::vector<DemodRule> demod_rules(const std::vector<Clause>& active, const OrderingContext& ctx) {
    std::vector<DemodRule> rules;
    for (const auto& d : active) {
        if (d.size() != 1 || !d[0].positive()) continue;
        bool has_abd_var = false;
        for (const auto& v : variables(d))
            if (v.kind == VarKind::Abducible) has_abd_var = true;
        if (has_abd_var) continue;
        OrderResult r = ctx.compare_terms_A(d[0].lhs(), d[0].rhs());
        if (r == OrderResult::GT)
            rules.push_back({d[0].lhs(), d[0].rhs()});
        else if (r == OrderResult::LT)
            rules.push_back({d[0].rhs(), d[0].lhs()});
    }
    return rules;
}

std::optional<Term> rewrite_once(const Term& t, const std::vector<DemodRule>& rules) {
    for (const auto& rule : rules) {
        BindingMap theta;
        if (match_term(rule.from, t, theta)) {
            Term image = apply_bindings(theta, rule.to);
            if (image != t) return image;
        }
    }
    if (t.is_app()) {
        for (std::size_t i = 0; i < t.arity(); ++i) {
            auto rw = rewrite_once(t.args()[i], rules);
            if (rw) {
                std::vector<Term> args = t.args();
                args[i] = *rw;
                return Term::app(t.name(), std::move(args));
            }
        }
    }
    return std::nullopt;
}

Clause demodulate(const Clause& c, const std::vector<DemodRule>& rules, int max_steps = 200) {
    Clause cur = c;
    for (int step = 0; step < max_steps; ++step) {
        bool changed = false;
        std::vector<Literal> lits;
        lits.reserve(cur.size());
        for (const auto& l : cur.lits()) {
            auto a = rewrite_once(l.lhs(), rules);
            auto b = rewrite_once(l.rhs(), rules);
            if (a || b) changed = true;
            lits.emplace_back(l.positive(), a ? *a : l.lhs(), b ? *b : l.rhs());
        }
        if (!changed) break;
        cur = Clause(std::move(lits));
    }
    return cur;
}

bool subsumed_by_any(const Clause& c, const std::vector<Clause>& active) {
    for (const auto& d : active)
        if (subsumes(d, c)) return true;
    return false;
}

} // namespace

namespace {

std::optional<std::string> redundancy_reason(const Clause& c, const std::vector<Clause>& active,
                                             const OrderingContext& ctx, bool use_demodulation) {
    if (is_syntactic_tautology(c)) return "tautology";
    for (const auto& d : active)
        if (subsumes(d, c)) return "subsumed by " + to_string(d);
    const Abducibles& abd = ctx.abducibles();
    if (!abd.empty()) {
        auto reduced = a_reduce(c, abd);
        if (reduced && std::find(active.begin(), active.end(), *reduced) != active.end())
            return "nu-image present";
    }
    if (use_demodulation) {
        auto rules = demod_rules(active, ctx);
        if (!rules.empty()) {
            Clause norm = demodulate(c, rules);
            if (norm != c && (is_syntactic_tautology(norm) || subsumed_by_any(norm, active)))
                return "demodulates to redundant " + to_string(norm);
        }
    }
    return std::nullopt;
}

} // namespace

bool is_redundant(const Clause& c, const std::vector<Clause>& active, const OrderingContext& ctx,
                  bool use_demodulation) {
    return redundancy_reason(c, active, ctx, use_demodulation).has_value();
}

namespace {

struct ClauseHash {
    std::size_t operator()(const Clause& c) const { return c.hash(); }
};

struct Prover {
    const OrderingContext& ctx;
    const SaturationConfig& cfg;
    SaturationOutcome out;

    struct Entry {
        Clause clause;
        std::size_t weight;
        enum class Where { Passive, Active, Deleted } where = Where::Passive;
    };
    std::vector<Entry> entries;
    std::unordered_map<Clause, int, ClauseHash> known;
    std::set<std::pair<std::size_t, int>> by_weight; // passive only
    std::set<int> by_age;                            // passive only
    std::vector<int> active_ids;
    int picks = 0;
    bool found_empty = false;
    bool weight_dropped = false;

    Prover(const OrderingContext& c, const SaturationConfig& f) : ctx(c), cfg(f) {}

    bool plain() const { return cfg.plain_sp; }

    void log_inf(Inference inf) {
        if (cfg.log_inferences) out.log.push_back(std::move(inf));
    }

    /// Contraction to fixpoint, each step logged: duplicate-literal
    /// merge, removal of disequations on otherwise unused variables,
    /// identification of same-abducible constraint variables, and
    /// A-reduction. Each step yields an equivalent clause that renders
    /// the premise A-redundant.
    Clause simplify(Clause c) {
        for (;;) {
            std::vector<Literal> dedup;
            for (const auto& l : c.lits())
                if (std::find(dedup.begin(), dedup.end(), l) == dedup.end()) dedup.push_back(l);
            if (dedup.size() != c.size()) {
                Clause merged{std::move(dedup)};
                log_inf({Rule::Merge, {c}, Substitution{}, merged});
                c = std::move(merged);
                continue;
            }
            if (auto dropped = drop_diseq(c)) {
                c = std::move(dropped->first);
                continue;
            }
            if (!plain() && !ctx.abducibles().empty()) {
                if (auto merged = constraint_merge(c)) {
                    c = std::move(*merged);
                    continue;
                }
                auto reduced = a_reduce(c, ctx.abducibles());
                if (reduced && *reduced != c) {
                    log_inf({Rule::AReduction, {c}, nu_of(c, ctx.abducibles()), *reduced});
                    c = *reduced;
                    continue;
                }
            }
            return c;
        }
    }

    /// x != x for a variable x, or x != t with x occurring neither in t
    /// nor in the rest of the clause: instantiating x to t makes the
    /// literal false, so the clause is equivalent without it.
    std::optional<std::pair<Clause, Substitution>> drop_diseq(const Clause& c) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Literal& l = c[i];
            if (l.positive()) continue;
            for (int side = 0; side < 2; ++side) {
                const Term& x = side == 0 ? l.lhs() : l.rhs();
                const Term& t = side == 0 ? l.rhs() : l.lhs();
                if (!x.is_var()) continue;
                Variable v = x.as_variable();
                bool self = t.is_var() && t.as_variable() == v;
                if (!self) {
                    if (t.contains_var(v)) continue;
                    bool elsewhere = false;
                    for (std::size_t j = 0; j < c.size() && !elsewhere; ++j) {
                        if (i == j) continue;
                        if (c[j].lhs().contains_var(v) || c[j].rhs().contains_var(v)) elsewhere = true;
                    }
                    if (elsewhere) continue;
                }
                std::vector<Literal> rest;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (i != j) rest.push_back(c[j]);
                Clause out(std::move(rest));
                Substitution sigma;
                if (!self) sigma.bind(v, t);
                log_inf({Rule::DropDiseq, {c}, sigma, out});
                return std::make_pair(std::move(out), std::move(sigma));
            }
        }
        return std::nullopt;
    }

    /// Footnote-style identification: when two distinct abducible
    /// variables carry a constraint with the same abducible, the second
    /// is renamed to the first.
    std::optional<Clause> constraint_merge(const Clause& c) {
        std::map<std::string, Variable> first_for;
        for (const auto& l : c.lits()) {
            if (!is_constraint_literal(l, ctx.abducibles())) continue;
            Term x = l.lhs().is_var() ? l.lhs() : l.rhs();
            Term a = l.lhs().is_var() ? l.rhs() : l.lhs();
            Variable v = x.as_variable();
            auto it = first_for.find(a.name());
            if (it == first_for.end()) {
                first_for.emplace(a.name(), v);
                continue;
            }
            if (it->second == v) continue;
            Substitution sigma;
            sigma.bind(v, Term::var(it->second));
            Clause out = sigma.apply(c);
            log_inf({Rule::ConstraintMerge, {c}, sigma, out});
            return out;
        }
        return std::nullopt;
    }

    void add_clause(Clause c) {
        c = canonical_clause(simplify(c));
        if (c.empty()) {
            found_empty = true;
            if (known.find(c) == known.end()) {
                int id = static_cast<int>(entries.size());
                entries.push_back({c, 0, Entry::Where::Passive});
                known.emplace(c, id);
            }
            return;
        }
        if (cfg.limits.max_weight && c.weight() > cfg.limits.max_weight) {
            weight_dropped = true;
            return;
        }
        if (is_syntactic_tautology(c)) return;
        if (known.find(c) != known.end()) return;
        int id = static_cast<int>(entries.size());
        std::size_t w = c.weight();
        entries.push_back({c, w, Entry::Where::Passive});
        known.emplace(std::move(c), id);
        by_weight.emplace(w, id);
        by_age.insert(id);
    }

    int pick() {
        bool by_age_pick = cfg.pick_ratio >= 0 && (picks % (cfg.pick_ratio + 1)) == cfg.pick_ratio;
        ++picks;
        int id;
        if (by_age_pick)
            id = *by_age.begin();
        else
            id = by_weight.begin()->second;
        by_weight.erase({entries[static_cast<std::size_t>(id)].weight, id});
        by_age.erase(id);
        return id;
    }

    std::vector<Clause> active_clauses() const {
        std::vector<Clause> v;
        v.reserve(active_ids.size());
        for (int id : active_ids) v.push_back(entries[static_cast<std::size_t>(id)].clause);
        return v;
    }

    void check_invariants_on_keep(const Clause& c) {
        if (plain() || ctx.abducibles().empty()) return;
        if (!clause_abstracted(c, ctx.abducibles()))
            out.invariant_violations.push_back("kept clause not abstracted: " + to_string(c));
        if (!clause_va_stable(c, ctx.abducibles()))
            out.invariant_violations.push_back("kept clause not VA-stable: " + to_string(c));
    }

    void check_binary_premises(const Inference& inf) {
        if (plain() || ctx.abducibles().empty() || inf.premises.size() != 2) return;
        bool a1 = is_a_clause(inf.premises[0], ctx.abducibles());
        bool a2 = is_a_clause(inf.premises[1], ctx.abducibles());
        if (a1 != a2)
            out.invariant_violations.push_back("binary inference with a single A-clause premise: " +
                                               to_string(inf.premises[0]) + " ; " + to_string(inf.premises[1]));
    }

    void process(const Inference& inf) {
        ++out.stats.generated;
        check_binary_premises(inf);
        log_inf(inf);
        add_clause(inf.conclusion);
    }

    SaturationOutcome run(const std::vector<Clause>& input) {
        for (const auto& c : input) add_clause(c);
        while (!found_empty && !by_age.empty()) {
            if (out.stats.iterations >= cfg.limits.max_iterations ||
                out.stats.kept >= cfg.limits.max_clauses) {
                out.status = SaturationStatus::LimitReached;
                out.warnings.push_back("limit_reached");
                finish();
                return std::move(out);
            }
            ++out.stats.iterations;
            int gid = pick();
            Entry& ge = entries[static_cast<std::size_t>(gid)];
            std::vector<Clause> active = active_clauses();
            if (auto reason = redundancy_reason(ge.clause, active, ctx, cfg.use_demodulation)) {
                ge.where = Entry::Where::Deleted;
                ++out.stats.deleted_redundant;
                out.deletions.emplace_back(ge.clause, *reason);
                continue;
            }
            ge.where = Entry::Where::Active;
            ++out.stats.kept;
            check_invariants_on_keep(ge.clause);
            if (ctx.is_variable_eligible(ge.clause)) {
                if (!out.variable_eligible_seen) out.warnings.push_back("variable_eligible");
                out.variable_eligible_seen = true;
            }
            if (!ctx.abducibles().empty() && ge.clause.ground() && is_a_clause(ge.clause, ctx.abducibles()) &&
                cfg.on_a_clause)
                cfg.on_a_clause(ge.clause);
            // backward subsumption
            for (int id : active_ids) {
                Entry& e = entries[static_cast<std::size_t>(id)];
                if (e.where == Entry::Where::Active && subsumes(ge.clause, e.clause)) {
                    e.where = Entry::Where::Deleted;
                    ++out.stats.deleted_redundant;
                    out.deletions.emplace_back(e.clause, "backward subsumed by " + to_string(ge.clause));
                }
            }
            active_ids.erase(std::remove_if(active_ids.begin(), active_ids.end(),
                                            [&](int id) {
                                                return entries[static_cast<std::size_t>(id)].where !=
                                                       Entry::Where::Active;
                                            }),
                             active_ids.end());
            active_ids.push_back(gid);
            const Clause g = ge.clause;
            for (const auto& inf : reflection(g, ctx, !plain())) process(inf);
            if (found_empty) break;
            for (const auto& inf : equational_factoring(g, ctx, !plain())) process(inf);
            for (int id : std::vector<int>(active_ids)) {
                const Clause a = entries[static_cast<std::size_t>(id)].clause;
                for (const auto& inf : superposition(g, a, ctx, !plain())) process(inf);
                for (const auto& inf : paramodulation(g, a, ctx, !plain())) process(inf);
                if (a != g) {
                    for (const auto& inf : superposition(a, g, ctx, !plain())) process(inf);
                    for (const auto& inf : paramodulation(a, g, ctx, !plain())) process(inf);
                }
                if (found_empty) break;
            }
        }
        out.status = found_empty ? SaturationStatus::Unsatisfiable : SaturationStatus::Saturated;
        if (!found_empty && weight_dropped) {
            out.status = SaturationStatus::LimitReached;
            out.warnings.push_back("weight_limit");
        }
        finish();
        return std::move(out);
    }

    void finish() {
        for (int id : active_ids) {
            const Entry& e = entries[static_cast<std::size_t>(id)];
            if (e.where == Entry::Where::Active) out.final_clauses.push_back(e.clause);
        }
        if (found_empty) out.final_clauses.push_back(Clause{});
        out.t_infinity.clear();
        if (!ctx.abducibles().empty())
            for (const auto& c : out.final_clauses)
                if (c.ground() && is_a_clause(c, ctx.abducibles())) out.t_infinity.push_back(c);
    }
};

} // namespace

SaturationOutcome saturate(const std::vector<Clause>& input, const OrderingContext& ctx,
                           const SaturationConfig& cfg) {
    Prover p(ctx, cfg);
    return p.run(input);
}

std::vector<Clause> extract_t_infinity(const SaturationOutcome& out, const Abducibles& abd) {
    std::vector<Clause> t;
    for (const auto& c : out.final_clauses) {
        if (!is_a_clause(c, abd)) continue;
        if (c.ground()) t.push_back(c);
    }
    return t;
}

} // namespace abduce
