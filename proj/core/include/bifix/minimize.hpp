#pragma once

#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// Language-equivalent minimal DFA in canonical numbering: unreachable
/// states are dropped, indistinguishable states merged (Moore partition
/// refinement), and the quotient is renumbered by BFS from the initial
/// state with symbols explored in declared order.
Dfa minimize(const Dfa& d);

/// The reachable part of `d` renumbered by BFS (no merging). Two minimal
/// DFAs are isomorphic exactly when their canonical forms are equal.
Dfa canonical_form(const Dfa& d);

/// Isomorphism of minimal DFAs, decided by canonical-form equality.
/// Symbol order is part of the identity: permuting letters is not a DFA
/// isomorphism.
bool is_isomorphic(const Dfa& a, const Dfa& b);

/// Language equality, via emptiness of the symmetric-difference product.
/// Throws input_error when the alphabets differ (by name sequence).
bool equivalent(const Dfa& a, const Dfa& b);

/// Number of states of the minimal DFA (the quotient complexity).
int state_complexity(const Dfa& d);

/// Entry q is the state complexity of the language accepted from state q of
/// minimize(d). The entry for the initial state equals state_complexity(d).
std::vector<int> quotient_complexities(const Dfa& d);

} // namespace bifix
