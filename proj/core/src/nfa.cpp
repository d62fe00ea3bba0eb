#include "bifix/nfa.hpp"

#include <algorithm>

#include "bifix/errors.hpp"

namespace bifix {

namespace {

void check_sorted_in_range(std::vector<State>& v, int n, const char* what) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (State q : v) {
        if (q < 0 || q >= n)
            throw input_error(std::string(what) + " state out of range: " + std::to_string(q));
    }
}

} // namespace

Nfa::Nfa(int state_count, std::vector<std::string> alphabet,
         std::vector<std::vector<std::vector<State>>> delta,
         std::vector<std::vector<State>> epsilon,
         std::vector<State> initials, std::vector<State> finals)
    : n_(state_count),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      epsilon_(std::move(epsilon)),
      initials_(std::move(initials)),
      finals_(std::move(finals)) {
    if (n_ <= 0) throw input_error("state count must be positive");
    if (delta_.size() != static_cast<std::size_t>(n_))
        throw input_error("delta must have one row per state");
    for (auto& row : delta_) {
        if (row.size() != alphabet_.size())
            throw input_error("delta row must have one entry per symbol");
        for (auto& targets : row) check_sorted_in_range(targets, n_, "transition");
    }
    if (epsilon_.size() != static_cast<std::size_t>(n_))
        throw input_error("epsilon must have one row per state");
    for (auto& targets : epsilon_) check_sorted_in_range(targets, n_, "epsilon");
    check_sorted_in_range(initials_, n_, "initial");
    check_sorted_in_range(finals_, n_, "final");
    final_mask_.assign(n_, false);
    for (State f : finals_) final_mask_[f] = true;
}

Nfa nfa_of(const Dfa& d) {
    const int n = d.state_count();
    const int k = d.symbol_count();
    std::vector<std::vector<std::vector<State>>> delta(
        n, std::vector<std::vector<State>>(k));
    for (State q = 0; q < n; ++q) {
        for (int a = 0; a < k; ++a) delta[q][a] = {d.next(q, a)};
    }
    return Nfa(n, d.alphabet(), std::move(delta),
               std::vector<std::vector<State>>(n), {d.initial()}, d.finals());
}

} // namespace bifix
