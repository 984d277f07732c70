#include "abduce/clause.hpp"

#include <algorithm>

namespace abduce {

namespace {
std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
} // namespace

Literal::Literal(bool positive, Term a, Term b) : positive_(positive), lhs_(std::move(a)), rhs_(std::move(b)) {
    if (lhs_.cmp(rhs_) > 0) std::swap(lhs_, rhs_);
}

std::size_t Literal::hash() const {
    return hash_combine(hash_combine(lhs_.hash(), rhs_.hash()), positive_ ? 1u : 2u);
}

int Literal::cmp(const Literal& o) const {
    if (positive_ != o.positive_) return positive_ ? 1 : -1; // negatives first
    int c = lhs_.cmp(o.lhs_);
    if (c != 0) return c;
    return rhs_.cmp(o.rhs_);
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end(), [](const Literal& a, const Literal& b) { return a.cmp(b) < 0; });
}

bool Clause::ground() const {
    for (const auto& l : lits_)
        if (!l.ground()) return false;
    return true;
}

std::size_t Clause::weight() const {
    std::size_t w = 0;
    for (const auto& l : lits_) w += l.weight();
    return w;
}

std::size_t Clause::hash() const {
    std::size_t h = 0xC1A05Eu;
    for (const auto& l : lits_) h = hash_combine(h, l.hash());
    return h;
}

int Clause::cmp(const Clause& o) const {
    if (size() != o.size()) return size() < o.size() ? -1 : 1;
    for (std::size_t i = 0; i < size(); ++i) {
        int c = lits_[i].cmp(o.lits_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::vector<Variable> variables(const Literal& l) {
    std::vector<Variable> out;
    collect_vars(l.lhs(), out);
    collect_vars(l.rhs(), out);
    return out;
}

std::vector<Variable> variables(const Clause& c) {
    std::vector<Variable> out;
    for (const auto& l : c.lits()) {
        collect_vars(l.lhs(), out);
        collect_vars(l.rhs(), out);
    }
    return out;
}

std::string to_string(const Literal& l) {
    return to_string(l.lhs()) + (l.positive() ? " = " : " != ") + to_string(l.rhs());
}

std::string to_string(const Clause& c) {
    if (c.empty()) return "false";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " | ";
        s += to_string(c[i]);
    }
    return s;
}

bool is_a_literal(const Literal& l, const Abducibles& abd) {
    return is_a_term(l.lhs(), abd) && is_a_term(l.rhs(), abd);
}

bool is_a_clause(const Clause& c, const Abducibles& abd) {
    for (const auto& l : c.lits())
        if (!is_a_literal(l, abd)) return false;
    return true;
}

bool is_constraint_literal(const Literal& l, const Abducibles& abd) {
    if (l.positive()) return false;
    const Term& a = l.lhs();
    const Term& b = l.rhs();
    auto ok = [&](const Term& x, const Term& y) {
        return x.is_var() && x.var_kind() == VarKind::Abducible && y.is_const() && abd.contains(y.name());
    };
    return ok(a, b) || ok(b, a);
}

bool literal_abstracted(const Literal& l, const Abducibles& abd) {
    return term_abstracted(l.lhs(), abd) && term_abstracted(l.rhs(), abd);
}

bool clause_abstracted(const Clause& c, const Abducibles& abd) {
    for (const auto& l : c.lits())
        if (!literal_abstracted(l, abd) && !is_a_literal(l, abd)) return false;
    return true;
}

bool clause_va_stable(const Clause& c, const Abducibles& abd) {
    std::vector<Variable> constrained;
    for (const auto& l : c.lits()) {
        if (!is_constraint_literal(l, abd)) continue;
        for (const auto& v : variables(l))
            if (v.kind == VarKind::Abducible) constrained.push_back(v);
    }
    for (const auto& v : variables(c)) {
        if (v.kind != VarKind::Abducible) continue;
        if (std::find(constrained.begin(), constrained.end(), v) == constrained.end()) return false;
    }
    return true;
}

bool literal_flat(const Literal& l) {
    auto flat = [](const Term& t) { return t.is_var() || t.is_const(); };
    return flat(l.lhs()) && flat(l.rhs());
}

bool clause_flat(const Clause& c) {
    for (const auto& l : c.lits())
        if (!literal_flat(l)) return false;
    return true;
}

ClausePartition partition_clause(const Clause& c, const Abducibles& abd) {
    std::vector<Literal> delta, delta_bar, gamma;
    for (const auto& l : c.lits()) {
        if (is_a_literal(l, abd))
            delta.push_back(l);
        else
            delta_bar.push_back(l);
        if (is_constraint_literal(l, abd)) gamma.push_back(l);
    }
    return ClausePartition{Clause(std::move(delta)), Clause(std::move(delta_bar)), Clause(std::move(gamma))};
}

ClauseClass classify_clause(const Clause& c, const Abducibles& abd) {
    return ClauseClass{
        is_a_clause(c, abd),
        clause_abstracted(c, abd),
        clause_va_stable(c, abd),
        clause_flat(c),
        c.ground(),
    };
}

std::vector<Clause> negate_ground_clause(const Clause& c) {
    if (!c.ground()) throw NonGroundError("cannot negate non-ground clause: " + to_string(c));
    std::vector<Clause> out;
    for (const auto& l : c.lits()) {
        Clause unit({l.complement()});
        if (std::find(out.begin(), out.end(), unit) == out.end()) out.push_back(std::move(unit));
    }
    return out;
}

bool is_syntactic_tautology(const Clause& c) {
    for (const auto& l : c.lits())
        if (l.trivially_true()) return true;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i].positive() != c[j].positive() && c[i].lhs() == c[j].lhs() && c[i].rhs() == c[j].rhs())
                return true;
    return false;
}

} // namespace abduce
