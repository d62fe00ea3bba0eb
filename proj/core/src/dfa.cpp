#include "bifix/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "bifix/errors.hpp"

namespace bifix {

namespace {

bool valid_symbol_name(const std::string& name) {
    if (name.empty()) return false;
    for (unsigned char c : name) {
        if (std::isspace(c)) return false;
    }
    return true;
}

} // namespace

Dfa::Dfa(int state_count, std::vector<std::string> alphabet,
         std::vector<State> delta, State initial, std::vector<State> finals)
    : n_(state_count),
      k_(static_cast<int>(alphabet.size())),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
    if (n_ <= 0) throw input_error("state count must be positive");

    std::unordered_set<std::string> seen;
    for (const std::string& name : alphabet_) {
        if (!valid_symbol_name(name))
            throw input_error("symbol names must be non-empty and whitespace-free");
        if (!seen.insert(name).second)
            throw input_error("duplicate symbol name: " + name);
    }

    if (delta_.size() != static_cast<std::size_t>(n_) * k_)
        throw input_error("transition table must have exactly n*k entries");
    for (State t : delta_) {
        if (t < 0 || t >= n_)
            throw input_error("transition target out of range: " + std::to_string(t));
    }

    if (initial_ < 0 || initial_ >= n_)
        throw input_error("initial state out of range");

    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    final_mask_.assign(n_, false);
    for (State f : finals_) {
        if (f < 0 || f >= n_)
            throw input_error("final state out of range: " + std::to_string(f));
        final_mask_[f] = true;
    }
}

int Dfa::symbol_index(std::string_view name) const {
    for (int a = 0; a < k_; ++a) {
        if (alphabet_[a] == name) return a;
    }
    return -1;
}

bool Dfa::operator==(const Dfa& other) const {
    return n_ == other.n_ && alphabet_ == other.alphabet_ &&
           delta_ == other.delta_ && initial_ == other.initial_ &&
           finals_ == other.finals_;
}

State apply_word(const Dfa& d, State q, const Word& w) {
    if (q < 0 || q >= d.state_count()) throw input_error("state out of range");
    for (int a : w) {
        if (a < 0 || a >= d.symbol_count())
            throw input_error("symbol index out of range: " + std::to_string(a));
        q = d.next(q, a);
    }
    return q;
}

std::vector<State> reachable(const Dfa& d) {
    std::vector<State> order;
    std::vector<bool> seen(d.state_count(), false);
    order.reserve(d.state_count());
    order.push_back(d.initial());
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        State q = order[i];
        for (int a = 0; a < d.symbol_count(); ++a) {
            State t = d.next(q, a);
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
        }
    }
    return order;
}

} // namespace bifix
