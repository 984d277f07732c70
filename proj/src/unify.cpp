#include "abduce/unify.hpp"

namespace abduce {

namespace {

Term walk(const Term& t, const std::map<Variable, Term>& bind) {
    Term cur = t;
    while (cur.is_var()) {
        auto it = bind.find(cur.as_variable());
        if (it == bind.end()) return cur;
        cur = it->second;
    }
    return cur;
}

bool occurs(const Variable& v, const Term& t, const std::map<Variable, Term>& bind) {
    Term u = walk(t, bind);
    if (u.is_var()) return u.as_variable() == v;
    for (const auto& a : u.args())
        if (occurs(v, a, bind)) return true;
    return false;
}

bool unify_rec(const Term& a, const Term& b, std::map<Variable, Term>& bind) {
    Term t = walk(a, bind);
    Term s = walk(b, bind);
    if (t.is_var() && s.is_var() && t.as_variable() == s.as_variable()) return true;
    if (t.is_var()) {
        if (occurs(t.as_variable(), s, bind)) return false;
        bind.insert_or_assign(t.as_variable(), s);
        return true;
    }
    if (s.is_var()) {
        if (occurs(s.as_variable(), t, bind)) return false;
        bind.insert_or_assign(s.as_variable(), t);
        return true;
    }
    if (t.name() != s.name() || t.arity() != s.arity()) return false;
    for (std::size_t i = 0; i < t.arity(); ++i)
        if (!unify_rec(t.args()[i], s.args()[i], bind)) return false;
    return true;
}

Term resolve(const Term& t, const std::map<Variable, Term>& bind) {
    if (t.is_var()) {
        Term u = walk(t, bind);
        if (u.is_var()) return u;
        return resolve(u, bind);
    }
    if (t.ground()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(resolve(a, bind));
    return Term::app(t.name(), std::move(args));
}

} // namespace

std::optional<Substitution> mgu(const Term& t, const Term& s) {
    std::map<Variable, Term> bind;
    if (!unify_rec(t, s, bind)) return std::nullopt;
    Substitution out;
    for (const auto& [v, u] : bind) out.bind(v, resolve(u, bind));
    return out;
}

bool match_term(const Term& pattern, const Term& subject, BindingMap& out) {
    if (pattern.is_var()) {
        auto it = out.find(pattern.as_variable());
        if (it != out.end()) return it->second == subject;
        out.insert_or_assign(pattern.as_variable(), subject);
        return true;
    }
    if (subject.is_var()) return false;
    if (pattern.name() != subject.name() || pattern.arity() != subject.arity()) return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i)
        if (!match_term(pattern.args()[i], subject.args()[i], out)) return false;
    return true;
}

Term apply_bindings(const BindingMap& b, const Term& t) {
    if (t.is_var()) {
        auto it = b.find(t.as_variable());
        return it == b.end() ? t : it->second;
    }
    if (t.ground()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(apply_bindings(b, a));
    return Term::app(t.name(), std::move(args));
}

bool is_a_compliant(const Substitution& s, const Abducibles& abd) {
    for (const auto& [v, t] : s.bindings()) {
        if (!term_abstracted(t, abd)) return false;
        if (v.kind == VarKind::Abducible && !(t.is_var() && t.var_kind() == VarKind::Abducible)) return false;
    }
    return true;
}

namespace {

bool subsume_rec(const std::vector<Literal>& dl, std::size_t i, const Clause& c, std::vector<bool>& used,
                 const BindingMap& theta) {
    if (i == dl.size()) return true;
    const Literal& p = dl[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (used[j]) continue;
        const Literal& q = c[j];
        if (p.positive() != q.positive()) continue;
        for (int orient = 0; orient < 2; ++orient) {
            const Term& qa = orient == 0 ? q.lhs() : q.rhs();
            const Term& qb = orient == 0 ? q.rhs() : q.lhs();
            BindingMap ext = theta;
            if (!match_term(p.lhs(), qa, ext) || !match_term(p.rhs(), qb, ext)) continue;
            used[j] = true;
            if (subsume_rec(dl, i + 1, c, used, ext)) return true;
            used[j] = false;
        }
    }
    return false;
}

} // namespace

bool subsumes(const Clause& d, const Clause& c) {
    if (d.size() > c.size()) return false;
    std::vector<bool> used(c.size(), false);
    return subsume_rec(d.lits(), 0, c, used, BindingMap{});
}

bool variant_clauses(const Clause& a, const Clause& b) {
    return a.size() == b.size() && subsumes(a, b) && subsumes(b, a);
}

UnifyResult a_compliant_mgu(const Term& t, const Term& s, const Abducibles& abd) {
    auto m = mgu(t, s);
    if (!m) return {UnifyResult::Status::NotUnifiable, {}};
    Substitution u = *m;
    // Repair x -> y bindings with x abducible and y ordinary: rename y to
    // x instead. Deterministic: bindings are processed in domain order,
    // restarting after each repair.
    for (bool repaired = true; repaired;) {
        repaired = false;
        for (const auto& [v, img] : u.bindings()) {
            if (v.kind == VarKind::Abducible && img.is_var() && img.var_kind() == VarKind::Ordinary) {
                Substitution ren;
                ren.bind(img.as_variable(), Term::var(v));
                u = u.compose(ren);
                repaired = true;
                break;
            }
        }
    }
    if (!is_a_compliant(u, abd)) return {UnifyResult::Status::NotACompliant, {}};
    return {UnifyResult::Status::Ok, std::move(u)};
}

} // namespace abduce
