#pragma once

#include <string>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// Nondeterministic finite automaton with epsilon transitions and a set of
/// initial states. Used as the intermediate object of the product, star and
/// reversal constructions before determinization.
class Nfa {
public:
    Nfa(int state_count, std::vector<std::string> alphabet,
        std::vector<std::vector<std::vector<State>>> delta,
        std::vector<std::vector<State>> epsilon,
        std::vector<State> initials, std::vector<State> finals);

    int state_count() const { return n_; }
    int symbol_count() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }

    const std::vector<State>& targets(State q, int a) const { return delta_[q][a]; }
    const std::vector<State>& epsilon_targets(State q) const { return epsilon_[q]; }
    const std::vector<State>& initials() const { return initials_; }
    const std::vector<State>& finals() const { return finals_; }
    bool is_final(State q) const { return final_mask_[q]; }

private:
    int n_;
    std::vector<std::string> alphabet_;
    std::vector<std::vector<std::vector<State>>> delta_; // [q][a] -> sorted targets
    std::vector<std::vector<State>> epsilon_;            // [q] -> sorted targets
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<bool> final_mask_;
};

/// Embeds a DFA as an NFA with the same states and no epsilon moves.
Nfa nfa_of(const Dfa& d);

} // namespace bifix
