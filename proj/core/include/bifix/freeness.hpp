#pragma once

#include <optional>

#include "bifix/dfa.hpp"

namespace bifix {

/// The lowest-numbered non-final state fixed by every letter, if one
/// exists. In a minimal DFA this is the unique state accepting nothing.
std::optional<State> find_empty_state(const Dfa& d);

/// Structural characterization on the minimal DFA of a non-empty language:
/// there is a dead state, and exactly one final state all of whose
/// transitions go there (its quotient is {epsilon}). The empty language and
/// {epsilon} are prefix-free by vacuity.
bool is_prefix_free(const Dfa& d);

/// Structural characterization on the minimal DFA: a dead state exists and
/// no non-empty word sends the initial state and another state to the same
/// live state. Checked by BFS over simultaneous state pairs. The empty
/// language and {epsilon} are suffix-free by vacuity.
bool is_suffix_free(const Dfa& d);

/// Prefix-free and suffix-free.
bool is_bifix_free(const Dfa& d);

/// True when the initial state of the minimal DFA has in-degree zero, i.e.
/// no non-empty word leads back to the initial quotient.
bool is_non_returning(const Dfa& d);

/// Relabels a minimal DFA of a non-empty bifix-free language into the
/// conventional layout: initial state 0, middle states 1..n-3 in BFS order,
/// the final state at n-2 and the dead state at n-1. Throws input_error
/// when `d` does not have that shape (not minimal, several finals, or no
/// dead state).
Dfa bifix_convention(const Dfa& d);

} // namespace bifix
