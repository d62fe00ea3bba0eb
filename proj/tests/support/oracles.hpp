#pragma once

// Independent test oracles. Everything here recomputes language facts by
// brute force (word refinement, bounded searches) so the production
// algorithms have something honest to disagree with.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix::testing {

/// Number of Myhill-Nerode classes among the reachable states, computed by
/// refining state pairs with words of increasing length (up to `max_len`)
/// until a fixpoint. Independent of the production minimizer.
int nerode_class_count(const Dfa& d, int max_len);

/// Acceptance of w from the initial state.
bool accepts(const Dfa& d, const Word& w);

/// Shortest accepted word, if any, capped at `max_len`.
std::optional<Word> shortest_accepted(const Dfa& d, int max_len);

/// A pair (u, uv) of accepted words with non-empty v and |uv| <= max_len,
/// if one exists: a violation of prefix-freeness.
std::optional<std::pair<Word, Word>> bounded_prefix_violation(const Dfa& d, int max_len);

/// A pair (v, uv) of accepted words with non-empty u and |uv| <= max_len,
/// if one exists: a violation of suffix-freeness.
std::optional<std::pair<Word, Word>> bounded_suffix_violation(const Dfa& d, int max_len);

/// All accepted words of length <= max_len, aborting with nullopt once more
/// than `cap` words were found. Deterministic order (length, then lex).
std::optional<std::vector<Word>> enumerate_accepted(const Dfa& d, int max_len,
                                                    std::size_t cap);

} // namespace bifix::testing
