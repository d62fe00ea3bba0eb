#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bifix {

using State = int;

/// A word is a sequence of symbol indices into some automaton's alphabet.
using Word = std::vector<int>;

/// Complete deterministic finite automaton with dense integer states.
///
/// The transition table is total: every (state, symbol) pair has a target.
/// Symbols carry names; binary operations align operand alphabets by name.
/// Instances are immutable after construction and safe to share across
/// threads.
class Dfa {
public:
    /// Validates all invariants (total in-range delta, unique whitespace-free
    /// symbol names, in-range initial/finals) and throws input_error on any
    /// violation. `finals` is deduplicated and stored sorted.
    Dfa(int state_count, std::vector<std::string> alphabet,
        std::vector<State> delta, State initial, std::vector<State> finals);

    int state_count() const { return n_; }
    int symbol_count() const { return k_; }

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::string& symbol_name(int a) const { return alphabet_[a]; }
    /// Index of a named symbol, or -1 when the name is absent.
    int symbol_index(std::string_view name) const;

    State next(State q, int a) const { return delta_[static_cast<std::size_t>(q) * k_ + a]; }
    const std::vector<State>& delta() const { return delta_; }

    State initial() const { return initial_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(State q) const { return final_mask_[q]; }

    bool operator==(const Dfa& other) const;

private:
    int n_;
    int k_;
    std::vector<std::string> alphabet_;
    std::vector<State> delta_; // row-major, delta_[q*k + a]
    State initial_;
    std::vector<State> finals_; // sorted, unique
    std::vector<bool> final_mask_;
};

/// State reached from q by reading w. Throws input_error on an out-of-range
/// state or symbol index. The empty word returns q itself.
State apply_word(const Dfa& d, State q, const Word& w);

/// States reachable from the initial state, in BFS discovery order
/// (queue by state, symbols explored in declared order).
std::vector<State> reachable(const Dfa& d);

} // namespace bifix
