#pragma once

#include <unordered_set>
#include <utility>
#include <vector>

#include "bifix/dfa.hpp"
#include "bifix/limits.hpp"
#include "bifix/transform.hpp"

namespace bifix {

/// Closure of a generator set under composition. `elements` keeps BFS
/// discovery order (generators first, then FIFO expansion), so dumps are
/// reproducible.
class SemigroupClosure {
public:
    SemigroupClosure(std::vector<Transformation> elements, int generator_count);

    const std::vector<Transformation>& elements() const { return elements_; }
    int generator_count() const { return generator_count_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Transformation& t) const { return lookup_.count(t) != 0; }

private:
    std::vector<Transformation> elements_;
    int generator_count_;
    std::unordered_set<Transformation, TransformationHash> lookup_;
};

/// BFS closure under right-composition with the generators. Aborts with
/// resource_error beyond `lim.max_elements` elements.
SemigroupClosure closure(const std::vector<Transformation>& generators,
                         const Limits& lim = Limits{});

/// Size of the transition semigroup of minimize(d): the number of
/// transformations induced by non-empty words. Equals the syntactic
/// complexity; note the identity is counted only when some non-empty word
/// induces it (impossible for non-returning languages).
long long syntactic_complexity(const Dfa& d, const Limits& lim = Limits{});

/// The three transformation families that can appear in the transition
/// semigroup of a minimal bifix-free DFA laid out with final state n-2 and
/// dead state n-1. Middle states are Q_M = {1, ..., n-3}.
///
///   Type1:  {0, n-2, n-1} -> n-1 and Q_M -> Q_M u {n-2, n-1}
///   Type2:  0 -> n-2, {n-2, n-1} -> n-1, Q_M -> Q_M u {n-1}
///   Type3:  0 -> Q_M,  {n-2, n-1} -> n-1, Q_M -> {n-2, n-1}
enum class WbfType { None, Type1, Type2, Type3 };

WbfType classify_wbf(const Transformation& t);

/// True when every element of the closure is of type 1, 2 or 3.
bool is_sub_wbf(const SemigroupClosure& c);

/// (n-1)^(n-3) + (n-2)^(n-3) + (n-3)*2^(n-3): the size of the full
/// three-type semigroup, and the maximal syntactic complexity of a
/// bifix-free language with n >= 6 quotients. Throws input_error for n < 6
/// or when the value overflows 64 bits.
unsigned long long wbf_size_formula(int n);

/// Every transformation of type 1, 2 or 3 on n states, in ascending order
/// of target vectors.
std::vector<Transformation> enumerate_wbf(int n);

/// Unordered pairs {p, q} of distinct middle states such that some element
/// maps 0 to one of them and a middle state to the other. Pairs are
/// reported with p < q, sorted.
std::vector<std::pair<State, State>> colliding_pairs(const SemigroupClosure& c);

/// Unordered pairs of distinct middle states mapped by some element to a
/// single state in Q_M u {n-2}. Pairs are reported with p < q, sorted.
std::vector<std::pair<State, State>> focused_pairs(const SemigroupClosure& c);

} // namespace bifix
