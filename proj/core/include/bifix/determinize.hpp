#pragma once

#include "bifix/dfa.hpp"
#include "bifix/limits.hpp"
#include "bifix/nfa.hpp"

namespace bifix {

/// Accessible subset construction with epsilon closure. Subsets are numbered
/// by first discovery (BFS from the closed initial set, symbols in declared
/// order), so the output is deterministic. The empty subset, when reachable,
/// becomes an ordinary dead state, which keeps the result complete.
///
/// Throws resource_error once the number of subsets exceeds `lim.max_states`
/// or the configured memory cap.
Dfa determinize(const Nfa& nfa, const Limits& lim = Limits{});

} // namespace bifix
