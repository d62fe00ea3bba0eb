#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// The unique unary bifix-free language of complexity n: {a^(n-2)}.
/// Chain 0 -> 1 -> ... -> n-2 with dead state n-1; n >= 3.
Dfa unary_free(int n);

/// Ternary family over {a, b, c} that simultaneously attains the worst-case
/// complexity of every basic operation (for n >= 9, paired with its
/// b/c-swapped dialect for the Boolean ones). Constructible for n >= 7.
///
/// With h = floor((n-1)/2):
///   a: 0 -> 1, middles -> n-2, {n-2, n-1} -> n-1
///   b: {0, n-2, n-1} -> n-1, cycle (1, 2, ..., n-3)
///   c: {0, n-2, n-1} -> n-1, 1 -> h, h -> n-2,
///      cycle (n-3, ..., h+1, h-1, ..., 2)
Dfa ternary_witness(int n);

/// ternary_witness(n) with the actions of letters b and c exchanged
/// (symbol names unchanged).
Dfa ternary_dialect(int n);

inline constexpr std::size_t kDefaultWstreamLetterCap = 20000;

/// Family whose transition semigroup is the entire three-type semigroup, so
/// its syntactic complexity is maximal. The alphabet has
/// (n-2)^(n-3) + (n-3)*2^(n-3) - 1 letters:
///   b1..b{n-3}            0 -> n-1, i -> n-2, n-2 -> n-1, rest fixed
///   c000001..             every type-2 transformation except
///                         (0 -> n-2)(middles -> n-1)(n-2 -> n-1)
///   d000001..             every type-3 transformation except the n-3 maps
///                         (0 -> q)(middles -> n-1)(n-2 -> n-1)
/// The c/d blocks are ordered by ascending target vector. Requires n >= 6
/// and an alphabet within `max_letters` (input_error otherwise).
Dfa wstream_witness(int n, std::size_t max_letters = kDefaultWstreamLetterCap);

/// (n+1)-letter family attaining the maximal number of atoms and every atom
/// complexity bound; n >= 6. Letters a, b, c, d, e1..e{n-3}:
///   a: 0 -> 1, everything else -> n-1
///   b: {0, n-2} -> n-1, swap (1, 2)
///   c: {0, n-2} -> n-1, cycle (1, ..., n-3)
///   d: {0, n-2} -> n-1, 2 -> 1
///   e_q: {0, n-2} -> n-1, q -> n-2
Dfa atom_witness(int n);

/// A minimal bifix-free DFA with n states whose reversal has exactly alpha
/// states, for any alpha in reverse_range(n).
///
/// For alpha >= n the DFA is built directly: letters a_q = (0 -> q)
/// ({1..n-2} -> n-1) for each middle q, plus a letter b_S = (S -> n-2)
/// (rest -> n-1) for alpha-2 chosen subsets of the middle states (always
/// the empty set and all singletons, then remaining subsets by ascending
/// bitmask). For alpha < n the reverse of revmagic(alpha, n) is minimized
/// and relabeled into the conventional layout.
Dfa revmagic(int n, long long alpha);

/// Permutational dialect: each letter x in the mapping's domain receives
/// the transformation of mapping(x); letters outside the domain are
/// deleted. Surviving symbols keep their names and relative order; the
/// result is not minimized. The mapping must be injective and refer to
/// existing symbols.
Dfa dialect(const Dfa& d,
            const std::vector<std::pair<std::string, std::string>>& mapping);

/// Minimal bifix-free DFA with n states and k letters, drawn uniformly from
/// the three transformation types with the seeded generator and resampled
/// until minimal. Deterministic in (n, k, seed); throws generation_error
/// after 1000 consecutive failed samples.
Dfa random_bifix_free(int n, int k, std::uint64_t seed);

} // namespace bifix
