#include "abduce/subst.hpp"

namespace abduce {

void Substitution::bind(const Variable& v, const Term& t) {
    if (t.is_var() && t.as_variable() == v) {
        bind_.erase(v);
        return;
    }
    bind_.insert_or_assign(v, t);
}

std::optional<Term> Substitution::lookup(const Variable& v) const {
    auto it = bind_.find(v);
    if (it == bind_.end()) return std::nullopt;
    return it->second;
}

Term Substitution::apply(const Term& t) const {
    if (bind_.empty()) return t;
    if (t.is_var()) {
        auto it = bind_.find(t.as_variable());
        return it == bind_.end() ? t : it->second;
    }
    if (t.ground()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(apply(a));
    return Term::app(t.name(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const {
    return Literal(l.positive(), apply(l.lhs()), apply(l.rhs()));
}

Clause Substitution::apply(const Clause& c) const {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c.lits()) lits.push_back(apply(l));
    return Clause(std::move(lits));
}

Substitution Substitution::compose(const Substitution& other) const {
    Substitution out;
    for (const auto& [v, t] : bind_) out.bind(v, other.apply(t));
    for (const auto& [v, t] : other.bind_)
        if (bind_.find(v) == bind_.end()) out.bind(v, t);
    return out;
}

std::string to_string(const Substitution& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, t] : s.bindings()) {
        if (!first) out += ", ";
        first = false;
        out += v.name + " -> " + to_string(t);
    }
    out += "}";
    return out;
}

} // namespace abduce
