#pragma once

#include "abduce/clause.hpp"
#include "abduce/subst.hpp"

#include <random>

// Shared helpers for tests: term construction shorthand and seeded
// random generators for property checks.
namespace testsup {

using namespace abduce;

inline Term C(const std::string& n) { return Term::constant(n); }
inline Term V(const std::string& n) { return Term::var(n, VarKind::Ordinary); }
inline Term AV(const std::string& n) { return Term::var(n, VarKind::Abducible); }
inline Term F(const std::string& f, std::vector<Term> args) { return Term::app(f, std::move(args)); }
inline Literal eq(Term a, Term b) { return Literal(true, std::move(a), std::move(b)); }
inline Literal neq(Term a, Term b) { return Literal(false, std::move(a), std::move(b)); }

struct Gen {
    std::mt19937_64 rng;
    std::vector<std::string> abducible_names{"a", "b"};
    std::vector<std::string> constant_names{"c", "d", "e"};
    std::vector<std::pair<std::string, int>> functions{{"f", 1}, {"g", 2}};
    std::vector<Variable> ordinary_vars;
    std::vector<Variable> abducible_vars;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int pick(int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); }
    bool coin(double p = 0.5) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

    Abducibles abducibles() const { return Abducibles(abducible_names); }

    /// Random ground term of depth <= depth.
    Term ground_term(int depth) {
        bool leaf = depth <= 0 || coin(0.45);
        if (leaf) {
            int n = static_cast<int>(abducible_names.size() + constant_names.size());
            int k = pick(n);
            if (k < static_cast<int>(abducible_names.size())) return C(abducible_names[static_cast<std::size_t>(k)]);
            return C(constant_names[static_cast<std::size_t>(k - static_cast<int>(abducible_names.size()))]);
        }
        auto [f, ar] = functions[static_cast<std::size_t>(pick(static_cast<int>(functions.size())))];
        std::vector<Term> args;
        for (int i = 0; i < ar; ++i) args.push_back(ground_term(depth - 1));
        return F(f, std::move(args));
    }

    /// Random term over the configured variables, depth <= depth.
    Term term(int depth) {
        bool leaf = depth <= 0 || coin(0.4);
        if (leaf) {
            int nv = static_cast<int>(ordinary_vars.size() + abducible_vars.size());
            int n = nv + static_cast<int>(abducible_names.size() + constant_names.size());
            int k = pick(n);
            if (k < static_cast<int>(ordinary_vars.size())) return Term::var(ordinary_vars[static_cast<std::size_t>(k)]);
            k -= static_cast<int>(ordinary_vars.size());
            if (k < static_cast<int>(abducible_vars.size())) return Term::var(abducible_vars[static_cast<std::size_t>(k)]);
            k -= static_cast<int>(abducible_vars.size());
            if (k < static_cast<int>(abducible_names.size())) return C(abducible_names[static_cast<std::size_t>(k)]);
            return C(constant_names[static_cast<std::size_t>(k - static_cast<int>(abducible_names.size()))]);
        }
        auto [f, ar] = functions[static_cast<std::size_t>(pick(static_cast<int>(functions.size())))];
        std::vector<Term> args;
        for (int i = 0; i < ar; ++i) args.push_back(term(depth - 1));
        return F(f, std::move(args));
    }

    /// Abstracted term: no abducible constants, abducible variables allowed.
    Term abstracted_term(int depth) {
        bool leaf = depth <= 0 || coin(0.4);
        if (leaf) {
            int n = static_cast<int>(ordinary_vars.size() + abducible_vars.size() + constant_names.size());
            int k = pick(n);
            if (k < static_cast<int>(ordinary_vars.size())) return Term::var(ordinary_vars[static_cast<std::size_t>(k)]);
            k -= static_cast<int>(ordinary_vars.size());
            if (k < static_cast<int>(abducible_vars.size())) return Term::var(abducible_vars[static_cast<std::size_t>(k)]);
            return C(constant_names[static_cast<std::size_t>(k - static_cast<int>(abducible_vars.size()))]);
        }
        auto [f, ar] = functions[static_cast<std::size_t>(pick(static_cast<int>(functions.size())))];
        std::vector<Term> args;
        for (int i = 0; i < ar; ++i) args.push_back(abstracted_term(depth - 1));
        return F(f, std::move(args));
    }

    Clause ground_clause(int max_lits, int depth) {
        int n = 1 + pick(max_lits);
        std::vector<Literal> lits;
        for (int i = 0; i < n; ++i) lits.emplace_back(coin(), ground_term(depth), ground_term(depth));
        return Clause(std::move(lits));
    }

    /// A-compliant substitution over the configured variables.
    Substitution a_compliant_subst(int depth) {
        Substitution s;
        for (const auto& v : ordinary_vars)
            if (coin()) s.bind(v, abstracted_term(depth));
        for (std::size_t i = 0; i + 1 < abducible_vars.size(); ++i)
            if (coin()) s.bind(abducible_vars[i], Term::var(abducible_vars[abducible_vars.size() - 1]));
        return s;
    }
};

} // namespace testsup
