#include "bifix/atoms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"
#include "bifix/minimize.hpp"

namespace bifix {

namespace {

struct PairKey {
    std::uint64_t x, y;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& p) const {
        std::uint64_t h = p.x * 0x9e3779b97f4a7c15ull;
        h ^= p.y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::uint64_t mask_of(const StateSet& S, int n) {
    std::uint64_t m = 0;
    for (State q : S) {
        if (q < 0 || q >= n) throw input_error("atom set contains a state out of range");
        m |= std::uint64_t{1} << q;
    }
    return m;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

Dfa atom_automaton(const Dfa& d, const StateSet& S, const Limits& lim) {
    const int n = d.state_count();
    const int k = d.symbol_count();
    if (n > 62) throw input_error("pair automaton supports at most 62 states");

    // image_bits[a][q]: singleton image of q under letter a, as a mask.
    std::vector<std::vector<std::uint64_t>> image_bits(k, std::vector<std::uint64_t>(n));
    for (int a = 0; a < k; ++a)
        for (State q = 0; q < n; ++q) image_bits[a][q] = std::uint64_t{1} << d.next(q, a);

    std::uint64_t final_mask = 0;
    for (State f : d.finals()) final_mask |= std::uint64_t{1} << f;
    const std::uint64_t all = (n == 62) ? ~std::uint64_t{0} >> 2
                                        : (std::uint64_t{1} << n) - 1;

    const std::uint64_t x0 = mask_of(S, n);
    const std::uint64_t y0 = all & ~x0;

    std::unordered_map<PairKey, int, PairKeyHash> index;
    std::vector<PairKey> pairs;
    int dead_id = -1;
    auto intern = [&](std::uint64_t x, std::uint64_t y) {
        auto [it, inserted] = index.try_emplace(PairKey{x, y}, static_cast<int>(pairs.size()));
        if (inserted) {
            pairs.push_back(PairKey{x, y});
            lim.check_states(pairs.size(), 16 + static_cast<std::size_t>(k) * sizeof(State));
        }
        return it->second;
    };
    auto image = [&](std::uint64_t set, int a) {
        std::uint64_t img = 0;
        while (set) {
            int q = std::countr_zero(set);
            set &= set - 1;
            img |= image_bits[a][q];
        }
        return img;
    };

    intern(x0, y0);
    std::vector<State> delta;
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairKey cur = pairs[i];
        const bool is_dead = (static_cast<int>(i) == dead_id);
        if (!is_dead && (cur.x & ~final_mask) == 0 && (cur.y & final_mask) == 0)
            finals.push_back(static_cast<State>(i));
        for (int a = 0; a < k; ++a) {
            if (is_dead) {
                delta.push_back(static_cast<State>(i));
                continue;
            }
            std::uint64_t nx = image(cur.x, a);
            std::uint64_t ny = image(cur.y, a);
            if (nx & ny) {
                if (dead_id == -1) dead_id = intern(~std::uint64_t{0}, ~std::uint64_t{0});
                delta.push_back(dead_id);
            } else {
                delta.push_back(intern(nx, ny));
            }
        }
    }
    return Dfa(static_cast<int>(pairs.size()), d.alphabet(), std::move(delta), 0,
               std::move(finals));
}

std::vector<StateSet> atoms(const Dfa& d, const Limits& lim) {
    const int n = d.state_count();
    if (d.finals().size() != 1)
        throw input_error("atom enumeration expects a minimal bifix-free DFA (one final state)");
    const State f = d.finals().front();
    std::optional<State> dead = find_empty_state(d);
    if (!dead) throw input_error("atom enumeration expects a dead state");

    StateSet middles;
    for (State q = 0; q < n; ++q)
        if (q != d.initial() && q != f && q != *dead) middles.push_back(q);
    if (middles.size() > 62) throw input_error("too many states for subset enumeration");

    std::vector<StateSet> candidates;
    candidates.push_back({d.initial()});
    candidates.push_back({f});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middles.size()); ++mask) {
        StateSet s;
        for (std::size_t i = 0; i < middles.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) s.push_back(middles[i]);
        candidates.push_back(std::move(s));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const StateSet& a, const StateSet& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    std::vector<StateSet> result;
    for (StateSet& s : candidates) {
        Dfa pair_dfa = atom_automaton(d, s, lim);
        if (!pair_dfa.finals().empty()) result.push_back(std::move(s));
    }
    return result;
}

int atom_complexity(const Dfa& d, const StateSet& S, const Limits& lim) {
    Dfa pair_dfa = atom_automaton(d, S, lim);
    if (pair_dfa.finals().empty())
        throw domain_error("the requested atom is empty");
    return state_complexity(pair_dfa);
}

unsigned long long atom_bound(int n, const StateSet& S) {
    if (n < 3) throw input_error("atom bound requires n >= 3");
    if (S.empty()) return (1ull << (n - 2)) + 1;
    if (S == StateSet{0}) return static_cast<unsigned long long>(n);
    if (S == StateSet{n - 2}) return 2;
    for (State q : S) {
        if (q < 1 || q > n - 3)
            throw input_error("atom bound: S must be {}, {0}, {n-2} or within the middle states");
    }
    const int s = static_cast<int>(S.size());
    unsigned long long total = 3;
    for (int x = 1; x <= s; ++x)
        for (int y = 0; y <= n - 3 - s; ++y)
            total += binomial(n - 3, x) * binomial(n - 3 - x, y);
    return total;
}

} // namespace bifix
