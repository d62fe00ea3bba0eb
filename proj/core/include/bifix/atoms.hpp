#pragma once

#include <vector>

#include "bifix/dfa.hpp"
#include "bifix/limits.hpp"

namespace bifix {

/// A set of states, kept sorted and duplicate-free.
using StateSet = std::vector<State>;

/// The pair automaton recognizing the atom A_S of a minimal bifix-free DFA:
/// states are disjoint pairs (X, Y) of state subsets plus a dead marker,
/// the start pair is (S, Q \ S), reading a letter takes images of both
/// components (dead when they intersect), and a pair accepts when X is
/// contained in the final set and Y avoids it. Only the reachable part is
/// materialized; the result is a complete DFA over the same alphabet.
///
/// Pair components are packed into 64-bit masks, so d must have at most 62
/// states. S outside the state set is an input_error.
Dfa atom_automaton(const Dfa& d, const StateSet& S, const Limits& lim = Limits{});

/// All S with a non-empty atom A_S, ordered by size then lexicographically.
/// `d` must be a minimal DFA of a non-empty bifix-free language; candidate
/// sets are {initial}, {final}, and the subsets of the middle states, since
/// any other S provably yields an empty intersection.
std::vector<StateSet> atoms(const Dfa& d, const Limits& lim = Limits{});

/// Quotient complexity of the atom A_S. Throws bifix::domain_error when
/// A_S is empty.
int atom_complexity(const Dfa& d, const StateSet& S, const Limits& lim = Limits{});

/// Tight upper bound on the quotient complexity of A_S for an n-state
/// minimal bifix-free DFA in conventional layout:
///   2^(n-2) + 1                        for S = {}
///   n                                  for S = {0}
///   2                                  for S = {n-2}
///   3 + sum_{x=1}^{|S|} sum_{y=0}^{n-3-|S|} C(n-3,x) C(n-3-x,y)
///                                      for non-empty S within {1..n-3}
/// Any other S has an empty atom and is rejected with input_error.
unsigned long long atom_bound(int n, const StateSet& S);

} // namespace bifix
