#pragma once

#include "abduce/clause.hpp"

namespace abduce {

/// Finite map from variables to terms, extended to a homomorphism on
/// terms, literals and clauses. Bindings are fully resolved (idempotent):
/// application is a single pass.
class Substitution {
public:
    Substitution() = default;

    bool is_identity() const { return bind_.empty(); }
    std::size_t size() const { return bind_.size(); }

    /// Adds or replaces a binding; an identity binding erases the entry.
    void bind(const Variable& v, const Term& t);
    std::optional<Term> lookup(const Variable& v) const;
    const std::map<Variable, Term>& bindings() const { return bind_; }

    Term apply(const Term& t) const;
    Literal apply(const Literal& l) const;
    Clause apply(const Clause& c) const;

    /// Composition: x -> other.apply(this->apply(x)).
    Substitution compose(const Substitution& other) const;

    /// Restriction of the domain to variables satisfying the predicate.
    template <typename Pred>
    Substitution restrict_domain(Pred keep) const {
        Substitution s;
        for (const auto& [v, t] : bind_)
            if (keep(v)) s.bind(v, t);
        return s;
    }

    bool operator==(const Substitution& o) const { return bind_ == o.bind_; }

private:
    std::map<Variable, Term> bind_;
};

std::string to_string(const Substitution& s);

} // namespace abduce
