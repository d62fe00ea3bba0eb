#include "bifix/ops.hpp"

#include <vector>

#include "bifix/determinize.hpp"
#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"
#include "bifix/minimize.hpp"

namespace bifix {

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet())
        throw input_error("operands must share the same alphabet");
}

bool pair_final(BooleanOp op, bool fa, bool fb) {
    switch (op) {
        case BooleanOp::Union: return fa || fb;
        case BooleanOp::Intersection: return fa && fb;
        case BooleanOp::Difference: return fa && !fb;
        case BooleanOp::SymmetricDifference: return fa != fb;
    }
    return false;
}

} // namespace

Dfa product_automaton(const Dfa& a, const Dfa& b, BooleanOp op) {
    require_same_alphabet(a, b);
    const int k = a.symbol_count();
    const int nb = b.state_count();

    std::vector<int> index(static_cast<std::size_t>(a.state_count()) * nb, -1);
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        int& slot = index[static_cast<std::size_t>(p) * nb + q];
        if (slot == -1) {
            slot = static_cast<int>(pairs.size());
            pairs.emplace_back(p, q);
        }
        return slot;
    };

    intern(a.initial(), b.initial());
    std::vector<State> delta;
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        if (pair_final(op, a.is_final(p), b.is_final(q)))
            finals.push_back(static_cast<State>(i));
        for (int sym = 0; sym < k; ++sym)
            delta.push_back(intern(a.next(p, sym), b.next(q, sym)));
    }
    return Dfa(static_cast<int>(pairs.size()), a.alphabet(), std::move(delta), 0,
               std::move(finals));
}

Nfa concat_nfa(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    const int na = a.state_count();
    const int n = na + b.state_count();
    const int k = a.symbol_count();

    std::vector<std::vector<std::vector<State>>> delta(
        n, std::vector<std::vector<State>>(k));
    std::vector<std::vector<State>> epsilon(n);
    for (State q = 0; q < na; ++q)
        for (int sym = 0; sym < k; ++sym) delta[q][sym] = {a.next(q, sym)};
    for (State q = 0; q < b.state_count(); ++q)
        for (int sym = 0; sym < k; ++sym) delta[na + q][sym] = {na + b.next(q, sym)};
    for (State f : a.finals()) epsilon[f] = {na + b.initial()};

    std::vector<State> finals;
    for (State f : b.finals()) finals.push_back(na + f);
    return Nfa(n, a.alphabet(), std::move(delta), std::move(epsilon), {a.initial()},
               std::move(finals));
}

Nfa star_nfa(const Dfa& d) {
    const int k = d.symbol_count();
    bool initial_entered = false;
    for (State q = 0; q < d.state_count() && !initial_entered; ++q)
        for (int a = 0; a < k; ++a)
            if (d.next(q, a) == d.initial()) {
                initial_entered = true;
                break;
            }

    if (!initial_entered) {
        const int n = d.state_count();
        std::vector<std::vector<std::vector<State>>> delta(
            n, std::vector<std::vector<State>>(k));
        std::vector<std::vector<State>> epsilon(n);
        for (State q = 0; q < n; ++q)
            for (int a = 0; a < k; ++a) delta[q][a] = {d.next(q, a)};
        for (State f : d.finals()) epsilon[f] = {d.initial()};
        return Nfa(n, d.alphabet(), std::move(delta), std::move(epsilon),
                   {d.initial()}, {d.initial()});
    }

    // Fresh accepting initial state at index n, epsilon-linked to the old one.
    const int n = d.state_count() + 1;
    const State fresh = n - 1;
    std::vector<std::vector<std::vector<State>>> delta(
        n, std::vector<std::vector<State>>(k));
    std::vector<std::vector<State>> epsilon(n);
    for (State q = 0; q < d.state_count(); ++q)
        for (int a = 0; a < k; ++a) delta[q][a] = {d.next(q, a)};
    epsilon[fresh] = {d.initial()};
    for (State f : d.finals()) epsilon[f] = {d.initial()};
    std::vector<State> finals = d.finals();
    finals.push_back(fresh);
    return Nfa(n, d.alphabet(), std::move(delta), std::move(epsilon), {fresh},
               std::move(finals));
}

Nfa reversal_nfa(const Dfa& d) {
    const int n = d.state_count();
    const int k = d.symbol_count();
    std::vector<std::vector<std::vector<State>>> delta(
        n, std::vector<std::vector<State>>(k));
    for (State q = 0; q < n; ++q)
        for (int a = 0; a < k; ++a) delta[d.next(q, a)][a].push_back(q);
    return Nfa(n, d.alphabet(), std::move(delta), std::vector<std::vector<State>>(n),
               d.finals(), {d.initial()});
}

Dfa boolean(const Dfa& a, const Dfa& b, BooleanOp op, const Limits& lim) {
    Dfa product = product_automaton(a, b, op);
    lim.check_states(product.state_count(),
                     static_cast<std::size_t>(product.symbol_count()) * sizeof(State));
    return minimize(product);
}

Dfa concat(const Dfa& a, const Dfa& b, const Limits& lim) {
    return minimize(determinize(concat_nfa(a, b), lim));
}

Dfa star(const Dfa& d, const Limits& lim) {
    return minimize(determinize(star_nfa(d), lim));
}

Dfa reverse(const Dfa& d, const Limits& lim) {
    return minimize(determinize(reversal_nfa(d), lim));
}

int star_complexity_predicted(const Dfa& d) {
    const int n = d.state_count();
    if (n < 3) throw input_error("prediction requires n >= 3");
    if (d.initial() != 0 || d.finals() != std::vector<State>{n - 2} ||
        find_empty_state(d) != std::optional<State>(n - 1))
        throw input_error("prediction requires the conventional bifix-free layout");
    if (state_complexity(d) != n || !is_bifix_free(d))
        throw input_error("prediction requires a minimal bifix-free DFA");

    for (State q = 0; q <= n - 3; ++q)
        for (int a = 0; a < d.symbol_count(); ++a)
            if (d.next(q, a) == n - 1) return n - 1;
    return n - 2;
}

OperationBounds bounds(int m, int n) {
    if (m < 4 || n < 4) throw input_error("operation bounds require m, n >= 4");
    OperationBounds b{};
    const long long mm = m, nn = n;
    b.union_size = mm * nn - (mm + nn);
    b.symdiff = b.union_size;
    b.intersection = mm * nn - 3 * (mm + nn - 4);
    b.difference = mm * nn - (2 * mm + 3 * nn - 9);
    b.concat = concat_bound(m, n);
    b.star = star_bound(n);
    b.reversal = reversal_bound(n);
    return b;
}

long long concat_bound(int m, int n) {
    if (m < 3 || n < 3) throw input_error("product bound requires m, n >= 3");
    return static_cast<long long>(m) + n - 2;
}

long long star_bound(int n) {
    if (n < 3) throw input_error("star bound requires n >= 3");
    return n - 1;
}

long long reversal_bound(int n) {
    if (n < 3) throw input_error("reversal bound requires n >= 3");
    if (n > 62) throw input_error("reversal bound overflows 64 bits for n > 62");
    return (1ll << (n - 3)) + 2;
}

IntInterval reverse_range(int n) {
    if (n < 3) throw input_error("reversal range requires n >= 3");
    // Smallest alpha with 2^(alpha-3) >= n-2, i.e. ceil(3 + log2(n-2)).
    long long lo = 3;
    while ((1ll << (lo - 3)) < n - 2) ++lo;
    return IntInterval{lo, reversal_bound(n)};
}

} // namespace bifix
