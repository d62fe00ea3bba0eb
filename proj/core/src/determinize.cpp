#include "bifix/determinize.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace bifix {

namespace {

// Subsets of NFA states as packed 64-bit word vectors.
struct SubsetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : v) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using Subset = std::vector<std::uint64_t>;

void set_bit(Subset& s, State q) { s[q >> 6] |= std::uint64_t{1} << (q & 63); }
bool test_bit(const Subset& s, State q) {
    return (s[q >> 6] >> (q & 63)) & 1;
}

void epsilon_close(const Nfa& nfa, Subset& s, std::vector<State>& stack) {
    stack.clear();
    const int n = nfa.state_count();
    for (State q = 0; q < n; ++q) {
        if (test_bit(s, q)) stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State t : nfa.epsilon_targets(q)) {
            if (!test_bit(s, t)) {
                set_bit(s, t);
                stack.push_back(t);
            }
        }
    }
}

} // namespace

Dfa determinize(const Nfa& nfa, const Limits& lim) {
    const int n = nfa.state_count();
    const int k = nfa.symbol_count();
    const int words = (n + 63) / 64;

    std::unordered_map<Subset, int, SubsetHash> index;
    std::vector<Subset> subsets;
    std::vector<State> delta;
    std::vector<State> finals;
    std::vector<State> scratch;

    auto intern = [&](Subset s) {
        auto [it, inserted] = index.try_emplace(std::move(s), static_cast<int>(subsets.size()));
        if (inserted) {
            subsets.push_back(it->first);
            lim.check_states(subsets.size(), static_cast<std::size_t>(words) * 8 +
                                                 static_cast<std::size_t>(k) * sizeof(State));
        }
        return it->second;
    };

    Subset init(words, 0);
    for (State q : nfa.initials()) set_bit(init, q);
    epsilon_close(nfa, init, scratch);
    intern(std::move(init));

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const Subset current = subsets[i]; // copy: `subsets` grows below
        bool is_final = false;
        for (State f : nfa.finals()) {
            if (test_bit(current, f)) {
                is_final = true;
                break;
            }
        }
        if (is_final) finals.push_back(static_cast<State>(i));

        for (int a = 0; a < k; ++a) {
            Subset move(words, 0);
            for (State q = 0; q < n; ++q) {
                if (!test_bit(current, q)) continue;
                for (State t : nfa.targets(q, a)) set_bit(move, t);
            }
            epsilon_close(nfa, move, scratch);
            delta.push_back(intern(std::move(move)));
        }
    }

    return Dfa(static_cast<int>(subsets.size()), nfa.alphabet(), std::move(delta), 0,
               std::move(finals));
}

} // namespace bifix
