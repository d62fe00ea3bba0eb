#pragma once

#include <cstddef>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// Total map on the state set of an n-state automaton; the object a word
/// induces on a DFA. Composition is read left to right: q(st) = (q s) t,
/// matching the action of reading word u then word v.
struct Transformation {
    std::vector<State> target;

    int size() const { return static_cast<int>(target.size()); }
    State operator()(State q) const { return target[q]; }
    bool operator==(const Transformation&) const = default;
    bool operator<(const Transformation& other) const { return target < other.target; }
};

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (State q : t.target) {
            h ^= static_cast<std::size_t>(q);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

Transformation identity(int n);

/// Left-to-right composition: apply `first`, then `second`.
/// Throws input_error when the sizes differ.
Transformation compose(const Transformation& first, const Transformation& second);

/// The transformation each letter of `d` induces on its states.
std::vector<Transformation> letter_transformations(const Dfa& d);

} // namespace bifix
