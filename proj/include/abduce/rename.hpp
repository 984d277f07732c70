#pragma once

#include "abduce/subst.hpp"

namespace abduce {

/// Renames variables by first occurrence (ordinary -> X0, X1, ...;
/// abducible -> _A0, _A1, ...) so that variant clauses get identical
/// spellings. Deterministic.
Clause canonical_clause(const Clause& c);

/// `other` with all variables renamed away from the variables of `base`.
Clause rename_apart(const Clause& other, const Clause& base);

} // namespace abduce
