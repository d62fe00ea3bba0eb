#include "bifix/minimize.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "bifix/errors.hpp"

namespace bifix {

namespace {

// BFS renumbering of the reachable part; perm[q] = new index or -1.
Dfa renumber_reachable(const Dfa& d) {
    std::vector<State> order = reachable(d);
    std::vector<State> perm(d.state_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<State>(i);

    const int n = static_cast<int>(order.size());
    const int k = d.symbol_count();
    std::vector<State> delta(static_cast<std::size_t>(n) * k);
    std::vector<State> finals;
    for (int i = 0; i < n; ++i) {
        State q = order[i];
        for (int a = 0; a < k; ++a) delta[static_cast<std::size_t>(i) * k + a] = perm[d.next(q, a)];
        if (d.is_final(q)) finals.push_back(i);
    }
    return Dfa(n, d.alphabet(), std::move(delta), 0, std::move(finals));
}

} // namespace

Dfa minimize(const Dfa& d) {
    const std::vector<State> reach = reachable(d);
    const int k = d.symbol_count();

    // Class ids are assigned by first occurrence in BFS order, which makes
    // every round (and hence the quotient) deterministic.
    std::vector<int> cls(d.state_count(), -1);
    int class_count = 0;
    {
        int final_cls = -1, nonfinal_cls = -1;
        for (State q : reach) {
            int& slot = d.is_final(q) ? final_cls : nonfinal_cls;
            if (slot == -1) slot = class_count++;
            cls[q] = slot;
        }
    }

    std::vector<int> signature;
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(d.state_count(), -1);
    while (true) {
        sig_ids.clear();
        int next_count = 0;
        for (State q : reach) {
            signature.clear();
            signature.push_back(cls[q]);
            for (int a = 0; a < k; ++a) signature.push_back(cls[d.next(q, a)]);
            auto [it, inserted] = sig_ids.try_emplace(signature, next_count);
            if (inserted) ++next_count;
            next_cls[q] = it->second;
        }
        bool stable = (next_count == class_count);
        class_count = next_count;
        for (State q : reach) cls[q] = next_cls[q];
        if (stable) break;
    }

    std::vector<State> delta(static_cast<std::size_t>(class_count) * k, -1);
    std::vector<State> finals;
    std::vector<bool> final_set(class_count, false);
    for (State q : reach) {
        int c = cls[q];
        for (int a = 0; a < k; ++a) delta[static_cast<std::size_t>(c) * k + a] = cls[d.next(q, a)];
        if (d.is_final(q) && !final_set[c]) {
            final_set[c] = true;
            finals.push_back(c);
        }
    }
    Dfa quotient(class_count, d.alphabet(), std::move(delta), cls[d.initial()],
                 std::move(finals));
    return renumber_reachable(quotient);
}

Dfa canonical_form(const Dfa& d) { return renumber_reachable(d); }

bool is_isomorphic(const Dfa& a, const Dfa& b) {
    return canonical_form(a) == canonical_form(b);
}

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet())
        throw input_error("operands must share the same alphabet");
    const int k = a.symbol_count();
    const int nb = b.state_count();

    std::vector<std::pair<State, State>> queue;
    std::unordered_map<long long, bool> seen;
    auto key = [nb](State p, State q) {
        return static_cast<long long>(p) * nb + q;
    };
    queue.emplace_back(a.initial(), b.initial());
    seen[key(a.initial(), b.initial())] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [p, q] = queue[i];
        if (a.is_final(p) != b.is_final(q)) return false;
        for (int sym = 0; sym < k; ++sym) {
            State np = a.next(p, sym);
            State nq = b.next(q, sym);
            if (seen.emplace(key(np, nq), true).second) queue.emplace_back(np, nq);
        }
    }
    return true;
}

int state_complexity(const Dfa& d) { return minimize(d).state_count(); }

std::vector<int> quotient_complexities(const Dfa& d) {
    Dfa m = minimize(d);
    std::vector<int> result(m.state_count());
    for (State q = 0; q < m.state_count(); ++q) {
        Dfa from_q(m.state_count(), m.alphabet(), m.delta(), q, m.finals());
        result[q] = state_complexity(from_q);
    }
    return result;
}

} // namespace bifix
