#include "abduce/rename.hpp"

#include <set>

namespace abduce {

namespace {

Clause rename_pass(const Clause& c) {
    Substitution ren;
    int ord = 0, abd = 0;
    for (const auto& v : variables(c)) {
        std::string fresh = v.kind == VarKind::Ordinary ? "X" + std::to_string(ord++)
                                                        : "_A" + std::to_string(abd++);
        ren.bind(v, Term::var(fresh, v.kind));
    }
    return ren.apply(c);
}

} // namespace

Clause canonical_clause(const Clause& c) {
    // renaming can reorder literals, so a second pass settles the names
    return rename_pass(rename_pass(c));
}

Clause rename_apart(const Clause& other, const Clause& base) {
    std::set<Variable> taken;
    for (const auto& v : variables(base)) taken.insert(v);
    Substitution ren;
    int ord = 0, abd = 0;
    for (const auto& v : variables(other)) {
        Variable fresh;
        do {
            fresh = v.kind == VarKind::Ordinary
                        ? Variable{"X" + std::to_string(ord++), VarKind::Ordinary}
                        : Variable{"_A" + std::to_string(abd++), VarKind::Abducible};
        } while (taken.count(fresh));
        ren.bind(v, Term::var(fresh));
    }
    return ren.apply(other);
}

} // namespace abduce
