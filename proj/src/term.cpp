#include "abduce/term.hpp"

#include <algorithm>

namespace abduce {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::var(std::string name, VarKind kind) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->vkind = kind;
    n->name = std::move(name);
    n->hash = hash_combine(std::hash<std::string>{}(n->name), kind == VarKind::Abducible ? 0x51u : 0x52u);
    n->weight = 1;
    n->ground = false;
    return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
    auto n = std::make_shared<Node>();
    n->is_var = false;
    n->vkind = VarKind::Ordinary;
    n->name = std::move(symbol);
    n->args = std::move(args);
    std::size_t h = hash_combine(std::hash<std::string>{}(n->name), 0xA5u);
    std::size_t w = 1;
    bool g = true;
    for (const auto& a : n->args) {
        h = hash_combine(h, a.hash());
        w += a.weight();
        g = g && a.ground();
    }
    n->hash = h;
    n->weight = w;
    n->ground = g;
    return Term(std::move(n));
}

bool Term::operator==(const Term& o) const {
    if (node_ == o.node_) return true;
    if (node_->hash != o.node_->hash) return false;
    if (node_->is_var != o.node_->is_var || node_->name != o.node_->name) return false;
    if (node_->is_var) return node_->vkind == o.node_->vkind;
    if (node_->args.size() != o.node_->args.size()) return false;
    for (std::size_t i = 0; i < node_->args.size(); ++i)
        if (!(node_->args[i] == o.node_->args[i])) return false;
    return true;
}

int Term::cmp(const Term& o) const {
    if (*this == o) return 0;
    // variables before applications
    if (is_var() != o.is_var()) return is_var() ? -1 : 1;
    if (is_var()) {
        if (var_kind() != o.var_kind()) return var_kind() < o.var_kind() ? -1 : 1;
        return name() < o.name() ? -1 : 1;
    }
    if (name() != o.name()) return name() < o.name() ? -1 : 1;
    if (arity() != o.arity()) return arity() < o.arity() ? -1 : 1;
    for (std::size_t i = 0; i < arity(); ++i) {
        int c = args()[i].cmp(o.args()[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool Term::contains_var(const Variable& v) const {
    if (is_var()) return as_variable() == v;
    for (const auto& a : args())
        if (a.contains_var(v)) return true;
    return false;
}

namespace {
void positions_rec(const Term& t, Path& p, std::vector<std::pair<Path, Term>>& out) {
    out.emplace_back(p, t);
    for (int i = 0; i < static_cast<int>(t.arity()); ++i) {
        p.push_back(i);
        positions_rec(t.args()[i], p, out);
        p.pop_back();
    }
}
} // namespace

std::vector<std::pair<Path, Term>> positions(const Term& t) {
    std::vector<std::pair<Path, Term>> out;
    Path p;
    positions_rec(t, p, out);
    return out;
}

Term subterm_at(const Term& t, const Path& p) {
    Term cur = t;
    for (int i : p) cur = cur.args()[i];
    return cur;
}

Term replace_at(const Term& t, const Path& p, const Term& s) {
    if (p.empty()) return s;
    std::vector<Term> args = t.args();
    Path rest(p.begin() + 1, p.end());
    args[p[0]] = replace_at(args[p[0]], rest, s);
    return Term::app(t.name(), std::move(args));
}

void collect_vars(const Term& t, std::vector<Variable>& out) {
    if (t.is_var()) {
        Variable v = t.as_variable();
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return;
    }
    for (const auto& a : t.args()) collect_vars(a, out);
}

std::vector<Variable> variables(const Term& t) {
    std::vector<Variable> out;
    collect_vars(t, out);
    return out;
}

std::string to_string(const Term& t) {
    if (t.is_var() || t.is_const()) return t.name();
    std::string s = t.name();
    s += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) s += ", ";
        s += to_string(t.args()[i]);
    }
    s += ')';
    return s;
}

Abducibles::Abducibles(std::vector<std::string> ordered) : ordered_(std::move(ordered)) {
    for (std::size_t i = 0; i < ordered_.size(); ++i) rank_[ordered_[i]] = static_cast<int>(i);
    if (rank_.size() != ordered_.size()) throw Error("duplicate abducible in order");
}

int Abducibles::rank(const std::string& name) const {
    auto it = rank_.find(name);
    return it == rank_.end() ? -1 : it->second;
}

const std::string& Abducibles::a0() const {
    if (ordered_.empty()) throw Error("empty abducible set has no minimum");
    return ordered_.front();
}

std::optional<std::size_t> Signature::use(const std::string& symbol, std::size_t arity) {
    auto it = arity_.find(symbol);
    if (it == arity_.end()) {
        arity_[symbol] = arity;
        return std::nullopt;
    }
    if (it->second != arity) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> Signature::arity_of(const std::string& symbol) const {
    auto it = arity_.find(symbol);
    if (it == arity_.end()) return std::nullopt;
    return it->second;
}

bool contains_abducible_constant(const Term& t, const Abducibles& abd) {
    if (t.is_var()) return false;
    if (t.is_const()) return abd.contains(t.name());
    for (const auto& a : t.args())
        if (contains_abducible_constant(a, abd)) return true;
    return false;
}

bool is_a_term(const Term& t, const Abducibles& abd) {
    if (t.is_var()) return t.var_kind() == VarKind::Abducible;
    return t.is_const() && abd.contains(t.name());
}

} // namespace abduce
