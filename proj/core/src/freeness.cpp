#include "bifix/freeness.hpp"

#include <vector>

#include "bifix/errors.hpp"
#include "bifix/minimize.hpp"

namespace bifix {

std::optional<State> find_empty_state(const Dfa& d) {
    for (State q = 0; q < d.state_count(); ++q) {
        if (d.is_final(q)) continue;
        bool sink = true;
        for (int a = 0; a < d.symbol_count(); ++a) {
            if (d.next(q, a) != q) {
                sink = false;
                break;
            }
        }
        if (sink) return q;
    }
    return std::nullopt;
}

bool is_prefix_free(const Dfa& d) {
    Dfa m = minimize(d);
    if (m.finals().empty()) return true; // empty language
    std::optional<State> dead = find_empty_state(m);
    if (!dead) return false;
    if (m.finals().size() != 1) return false;
    State f = m.finals().front();
    for (int a = 0; a < m.symbol_count(); ++a) {
        if (m.next(f, a) != *dead) return false;
    }
    return true;
}

bool is_suffix_free(const Dfa& d) {
    Dfa m = minimize(d);
    if (m.finals().empty()) return true; // empty language
    std::optional<State> dead = find_empty_state(m);
    if (!dead) return false;

    // A word leading back to the initial state makes every accepted word a
    // suffix of a longer one, unless the language is {epsilon}.
    const int n = m.state_count();
    const int k = m.symbol_count();
    const State init = m.initial();
    for (State q = 0; q < n; ++q) {
        for (int a = 0; a < k; ++a) {
            if (m.next(q, a) == init) return false;
        }
    }

    // BFS over pairs (0 delta_u, q delta_u) for non-empty u and q != 0. A
    // suffix clash is a pair of simultaneously final components; meeting in
    // the same live state is also fatal, since minimality extends it to a
    // common accepted word.
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    std::vector<std::pair<State, State>> queue;
    auto visit = [&](State p, State q) -> bool {
        if (p == q) return p != *dead; // a common live state extends to a clash
        if (m.is_final(p) && m.is_final(q)) return true;
        std::size_t key = static_cast<std::size_t>(p) * n + q;
        if (!seen[key]) {
            seen[key] = true;
            queue.emplace_back(p, q);
        }
        return false;
    };

    for (int a = 0; a < k; ++a) {
        for (State q = 0; q < n; ++q) {
            if (q == init) continue;
            if (visit(m.next(init, a), m.next(q, a))) return false;
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [p, q] = queue[i];
        for (int a = 0; a < k; ++a) {
            if (visit(m.next(p, a), m.next(q, a))) return false;
        }
    }
    return true;
}

bool is_bifix_free(const Dfa& d) { return is_prefix_free(d) && is_suffix_free(d); }

bool is_non_returning(const Dfa& d) {
    Dfa m = minimize(d);
    for (State q = 0; q < m.state_count(); ++q) {
        for (int a = 0; a < m.symbol_count(); ++a) {
            if (m.next(q, a) == m.initial()) return false;
        }
    }
    return true;
}

Dfa bifix_convention(const Dfa& d) {
    const int n = d.state_count();
    if (n < 3) throw input_error("conventional layout needs at least 3 states");
    if (reachable(d).size() != static_cast<std::size_t>(n))
        throw input_error("conventional layout requires a trim (all-reachable) DFA");
    if (d.finals().size() != 1)
        throw input_error("conventional layout requires exactly one final state");
    std::optional<State> dead = find_empty_state(d);
    if (!dead) throw input_error("conventional layout requires a dead state");
    const State f = d.finals().front();
    if (f == *dead || d.initial() == f || d.initial() == *dead)
        throw input_error("initial, final and dead states must be distinct");

    std::vector<State> perm(n, -1);
    perm[d.initial()] = 0;
    perm[f] = n - 2;
    perm[*dead] = n - 1;
    State next_id = 1;
    for (State q : reachable(d)) {
        if (perm[q] == -1) perm[q] = next_id++;
    }

    const int k = d.symbol_count();
    std::vector<State> delta(static_cast<std::size_t>(n) * k);
    for (State q = 0; q < n; ++q) {
        for (int a = 0; a < k; ++a)
            delta[static_cast<std::size_t>(perm[q]) * k + a] = perm[d.next(q, a)];
    }
    return Dfa(n, d.alphabet(), std::move(delta), 0, {n - 2});
}

} // namespace bifix
