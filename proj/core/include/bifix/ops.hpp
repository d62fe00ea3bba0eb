#pragma once

#include "bifix/dfa.hpp"
#include "bifix/limits.hpp"
#include "bifix/nfa.hpp"

namespace bifix {

enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

/// Reachable direct product with finals chosen per operation; unminimized.
Dfa product_automaton(const Dfa& a, const Dfa& b, BooleanOp op);

/// NFA of a.b: disjoint union with an epsilon edge from every final of `a`
/// to the initial of `b`.
Nfa concat_nfa(const Dfa& a, const Dfa& b);

/// NFA of d*. When no transition enters the initial state (true for every
/// minimal DFA of a suffix-free language) this adds only epsilon edges from
/// the finals back to the initial state and makes the initial state
/// accepting. Otherwise a fresh accepting initial state is prepended, since
/// re-entering the original initial state would otherwise accept too much.
Nfa star_nfa(const Dfa& d);

/// NFA of the reverse language: edges flipped, finals become initial,
/// the initial becomes final.
Nfa reversal_nfa(const Dfa& d);

/// Minimal DFA of the Boolean combination. Operands must share the same
/// alphabet (by name sequence); otherwise input_error.
Dfa boolean(const Dfa& a, const Dfa& b, BooleanOp op, const Limits& lim = Limits{});

/// Minimal DFA of the product (concatenation) a.b. Same-alphabet rule as
/// boolean().
Dfa concat(const Dfa& a, const Dfa& b, const Limits& lim = Limits{});

/// Minimal DFA of d*.
Dfa star(const Dfa& d, const Limits& lim = Limits{});

/// Minimal DFA of the reverse language.
Dfa reverse(const Dfa& d, const Limits& lim = Limits{});

/// Predicted state complexity of the star of a minimal bifix-free DFA in
/// conventional layout: n-1 when some letter maps a state of {0,...,n-3} to
/// the dead state n-1, and n-2 otherwise. Throws input_error when the
/// precondition does not hold.
int star_complexity_predicted(const Dfa& d);

/// Tight worst-case complexities of the basic operations on bifix-free
/// languages with m and n quotients (m, n >= 4).
struct OperationBounds {
    long long union_size;
    long long symdiff;
    long long intersection;
    long long difference;
    long long concat;
    long long star;
    long long reversal;
};

OperationBounds bounds(int m, int n);

long long concat_bound(int m, int n); // m + n - 2, for m, n >= 3
long long star_bound(int n);          // n - 1, for n >= 3
long long reversal_bound(int n);      // 2^(n-3) + 2, for n >= 3

struct IntInterval {
    long long lo;
    long long hi;
    bool contains(long long v) const { return lo <= v && v <= hi; }
    bool operator==(const IntInterval&) const = default;
};

/// Inclusive interval of complexities attainable by reversing an n-state
/// bifix-free language: [ceil(3 + log2(n-2)), 2 + 2^(n-3)], for n >= 3.
IntInterval reverse_range(int n);

} // namespace bifix
