#include "abduce/ordering.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace abduce {

std::string to_string(OrderResult r) {
    switch (r) {
    case OrderResult::LT: return "LT";
    case OrderResult::GT: return "GT";
    case OrderResult::EQ: return "EQ";
    case OrderResult::INCOMPARABLE: return "INCOMPARABLE";
    }
    return "?";
}

Term OrderingContext::reduce_to_a0(const Term& t) const {
    if (abd_.empty()) return t;
    if (t.is_var()) return t;
    if (t.is_const()) return abd_.contains(t.name()) ? Term::constant(abd_.a0()) : t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(reduce_to_a0(a));
    return Term::app(t.name(), std::move(args));
}

Literal OrderingContext::reduce_to_a0(const Literal& l) const {
    return Literal(l.positive(), reduce_to_a0(l.lhs()), reduce_to_a0(l.rhs()));
}

Clause OrderingContext::reduce_to_a0(const Clause& c) const {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c.lits()) lits.push_back(reduce_to_a0(l));
    return Clause(std::move(lits));
}

Term OrderingContext::apply_gamma0(const Term& t) const {
    if (t.is_var())
        return (t.var_kind() == VarKind::Abducible && !abd_.empty()) ? Term::constant(abd_.a0()) : t;
    if (t.ground() || t.is_const()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(apply_gamma0(a));
    return Term::app(t.name(), std::move(args));
}

Literal OrderingContext::apply_gamma0(const Literal& l) const {
    return Literal(l.positive(), apply_gamma0(l.lhs()), apply_gamma0(l.rhs()));
}

Clause OrderingContext::apply_gamma0(const Clause& c) const {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c.lits()) lits.push_back(apply_gamma0(l));
    return Clause(std::move(lits));
}

// Precedence: a0 < other constants (by name) < function symbols (by
// arity, then name). Only applied to A-reduced terms, where a0 is the
// sole abducible left.
bool OrderingContext::prec_gt(const Term& s, const Term& t) const {
    auto rank = [&](const Term& u) {
        int cls;
        if (u.is_const())
            cls = (!abd_.empty() && u.name() == abd_.a0()) ? 0 : 1;
        else
            cls = 2;
        return std::tuple<int, std::size_t, const std::string&>(cls, u.arity(), u.name());
    };
    return rank(s) > rank(t);
}

bool OrderingContext::lpo_gt(const Term& s, const Term& t) const {
    // s, t applications
    for (const auto& si : s.args()) {
        OrderResult r = lpo(si, t);
        if (r == OrderResult::GT || r == OrderResult::EQ) return true;
    }
    if (prec_gt(s, t)) {
        for (const auto& tj : t.args())
            if (lpo(s, tj) != OrderResult::GT) return false;
        return true;
    }
    if (s.name() == t.name() && s.arity() == t.arity()) {
        for (std::size_t i = 0; i < s.arity(); ++i) {
            int c = s.args()[i].cmp(t.args()[i]);
            if (c == 0) continue;
            if (lpo(s.args()[i], t.args()[i]) != OrderResult::GT) return false;
            for (std::size_t j = 0; j < t.arity(); ++j)
                if (lpo(s, t.args()[j]) != OrderResult::GT) return false;
            return true;
        }
    }
    return false;
}

OrderResult OrderingContext::lpo(const Term& s, const Term& t) const {
    if (s == t) return OrderResult::EQ;
    if (s.is_var()) return t.contains_var(s.as_variable()) ? OrderResult::LT : OrderResult::INCOMPARABLE;
    if (t.is_var()) return s.contains_var(t.as_variable()) ? OrderResult::GT : OrderResult::INCOMPARABLE;
    if (lpo_gt(s, t)) return OrderResult::GT;
    if (lpo_gt(t, s)) return OrderResult::LT;
    return OrderResult::INCOMPARABLE;
}

OrderResult OrderingContext::ground_tie(const Term& t, const Term& s) const {
    // precondition: t != s, both ground, equal A-reduced forms
    if (t.is_const()) {
        // both abducibles of the same class [a0]
        int rt = abd_.rank(t.name());
        int rs = abd_.rank(s.name());
        return rt < rs ? OrderResult::LT : OrderResult::GT;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (t.args()[i] == s.args()[i]) continue;
        return compare_terms(t.args()[i], s.args()[i]);
    }
    return OrderResult::EQ;
}

OrderResult OrderingContext::compare_terms(const Term& t, const Term& s) const {
    OrderResult r = lpo(reduce_to_a0(t), reduce_to_a0(s));
    if (r != OrderResult::EQ) return r;
    if (t == s) return OrderResult::EQ;
    if (!t.ground() || !s.ground()) return OrderResult::INCOMPARABLE;
    return ground_tie(t, s);
}

OrderResult OrderingContext::compare_terms_A(const Term& t, const Term& s) const {
    return compare_terms(apply_gamma0(t), apply_gamma0(s));
}

namespace {

// Dershowitz-Manna multiset extension over a (possibly partial) base
// comparison. Sound: GT/LT are only reported when they hold for every
// completion of the base order.
template <typename X, typename Cmp>
OrderResult multiset_compare(std::vector<X> a, std::vector<X> b, Cmp cmp) {
    for (std::size_t i = 0; i < a.size();) {
        bool erased = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (cmp(a[i], b[j]) == OrderResult::EQ) {
                a.erase(a.begin() + static_cast<long>(i));
                b.erase(b.begin() + static_cast<long>(j));
                erased = true;
                break;
            }
        }
        if (!erased) ++i;
    }
    if (a.empty() && b.empty()) return OrderResult::EQ;
    if (a.empty()) return OrderResult::LT;
    if (b.empty()) return OrderResult::GT;
    // a > b iff every leftover of b is strictly below some leftover of a
    auto covered_by = [&](const std::vector<X>& small, const std::vector<X>& big, OrderResult rel) {
        for (const auto& y : small) {
            bool covered = false;
            for (const auto& x : big) {
                if (cmp(y, x) == rel) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };
    bool a_gt = covered_by(b, a, OrderResult::LT);
    bool b_gt = covered_by(a, b, OrderResult::LT);
    if (a_gt && !b_gt) return OrderResult::GT;
    if (b_gt && !a_gt) return OrderResult::LT;
    return OrderResult::INCOMPARABLE;
}

} // namespace

OrderResult OrderingContext::compare_literals_A(const Literal& a, const Literal& b) const {
    Literal ag = apply_gamma0(a);
    Literal bg = apply_gamma0(b);
    auto measure = [](const Literal& l) -> std::vector<std::vector<Term>> {
        if (l.positive()) return {{l.lhs()}, {l.rhs()}};
        return {{l.lhs(), l.rhs()}};
    };
    auto term_cmp = [this](const Term& x, const Term& y) { return compare_terms(x, y); };
    auto inner_cmp = [&](const std::vector<Term>& x, const std::vector<Term>& y) {
        return multiset_compare(x, y, term_cmp);
    };
    return multiset_compare(measure(ag), measure(bg), inner_cmp);
}

std::vector<std::size_t> OrderingContext::maximal_literals(const Clause& c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < c.size() && !dominated; ++j) {
            if (i == j) continue;
            if (compare_literals_A(c[i], c[j]) == OrderResult::LT) dominated = true;
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

bool OrderingContext::is_variable_eligible(const Clause& c) const {
    for (std::size_t i : maximal_literals(c)) {
        const Literal& l = c[i];
        if (!l.positive()) continue;
        auto eligible_side = [&](const Term& x, const Term& t) {
            return x.is_var() && compare_terms_A(x, t) != OrderResult::LT;
        };
        if (eligible_side(l.lhs(), l.rhs()) || eligible_side(l.rhs(), l.lhs())) return true;
    }
    return false;
}

} // namespace abduce
