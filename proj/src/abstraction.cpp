#include "abduce/abstraction.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace abduce {

namespace {

Term abstract_term(const Term& t, const Abducibles& abd, int& counter, std::vector<Literal>& constraints,
                   const std::set<std::string>& taken) {
    if (t.is_var()) return t;
    if (t.is_const()) {
        if (!abd.contains(t.name())) return t;
        std::string fresh;
        do {
            fresh = "_A" + std::to_string(counter++);
        } while (taken.count(fresh));
        Term x = Term::var(fresh, VarKind::Abducible);
        constraints.emplace_back(false, x, t);
        return x;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(abstract_term(a, abd, counter, constraints, taken));
    return Term::app(t.name(), std::move(args));
}

} // namespace

Clause abstract_clause(const Clause& c, const Abducibles& abd) {
    std::set<std::string> taken;
    for (const auto& v : variables(c)) taken.insert(v.name);
    int counter = 0;
    std::vector<Literal> constraints;
    std::vector<Literal> body;
    for (const auto& l : c.lits()) {
        if (is_a_literal(l, abd)) {
            body.push_back(l);
            continue;
        }
        Term lhs = abstract_term(l.lhs(), abd, counter, constraints, taken);
        Term rhs = abstract_term(l.rhs(), abd, counter, constraints, taken);
        body.emplace_back(l.positive(), std::move(lhs), std::move(rhs));
    }
    std::vector<Literal> all = std::move(constraints);
    all.insert(all.end(), body.begin(), body.end());
    return Clause(std::move(all));
}

std::vector<Clause> abstract_set(const std::vector<Clause>& cs, const Abducibles& abd) {
    std::vector<Clause> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(abstract_clause(c, abd));
    return out;
}

Substitution nu_of(const Clause& c, const Abducibles& abd) {
    std::map<Variable, int> best; // variable -> minimal rank seen
    for (const auto& l : c.lits()) {
        if (!is_constraint_literal(l, abd)) continue;
        Term x = l.lhs(), a = l.rhs();
        if (!x.is_var()) std::swap(x, a);
        int r = abd.rank(a.name());
        Variable v = x.as_variable();
        auto it = best.find(v);
        if (it == best.end() || r < it->second) best[v] = r;
    }
    Substitution nu;
    for (const auto& [v, r] : best) nu.bind(v, Term::constant(abd.ordered()[static_cast<std::size_t>(r)]));
    return nu;
}

std::optional<Clause> a_reduce(const Clause& c, const Abducibles& abd) {
    if (!is_a_clause(c, abd)) return std::nullopt;
    Substitution nu = nu_of(c, abd);
    if (nu.is_identity()) return std::nullopt;
    return nu.apply(c);
}

namespace {

Term replace_everywhere(const Term& t, const Term& from, const Term& to) {
    if (t == from) return to;
    if (t.is_var() || t.is_const()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(replace_everywhere(a, from, to));
    return Term::app(t.name(), std::move(args));
}

Clause replace_everywhere(const Clause& c, const Term& from, const Term& to) {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c.lits())
        lits.emplace_back(l.positive(), replace_everywhere(l.lhs(), from, to),
                          replace_everywhere(l.rhs(), from, to));
    return Clause(std::move(lits));
}

} // namespace

FlattenResult flatten_named_terms(const std::vector<Clause>& clauses, const std::vector<Term>& targets,
                                  Signature& sig) {
    FlattenResult res;
    res.clauses = clauses;
    int next = 1;
    std::vector<std::pair<Term, Term>> naming; // flattened body -> constant, in creation order
    auto fresh_constant = [&]() {
        std::string name;
        do {
            name = "d" + std::to_string(next++);
        } while (sig.known(name));
        sig.use(name, 0);
        return Term::constant(name);
    };
    // Names t (already innermost-flattened) unless a name exists.
    auto name_of = [&](const Term& t) -> Term {
        for (const auto& [body, cst] : naming)
            if (body == t) return cst;
        Term cst = fresh_constant();
        naming.emplace_back(t, cst);
        res.fresh_constants.push_back(cst.name());
        res.definitions.push_back(Clause({Literal(true, cst, t)}));
        return cst;
    };
    std::function<Term(const Term&)> flatten_term = [&](const Term& t) -> Term {
        if (t.is_const()) return t;
        std::vector<Term> args;
        args.reserve(t.arity());
        for (const auto& a : t.args()) args.push_back(a.is_compound() ? flatten_term(a) : a);
        return name_of(Term::app(t.name(), std::move(args)));
    };
    for (const auto& target : targets) {
        if (!target.ground()) throw NonGroundError("flatten target must be ground: " + to_string(target));
        flatten_term(target);
    }
    // Bodies reference earlier fresh constants, so applying the
    // replacements in creation order rewrites nested occurrences fully.
    for (const auto& [body, cst] : naming)
        for (auto& c : res.clauses) c = replace_everywhere(c, body, cst);
    res.clauses.insert(res.clauses.end(), res.definitions.begin(), res.definitions.end());
    return res;
}

} // namespace abduce
