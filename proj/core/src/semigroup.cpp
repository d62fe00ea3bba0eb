#include "bifix/semigroup.hpp"

#include <algorithm>
#include <set>

#include "bifix/errors.hpp"
#include "bifix/minimize.hpp"

namespace bifix {

namespace {

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    if (b != 0 && a > ~0ull / b) throw input_error("formula value overflows 64 bits");
    return a * b;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
    if (a > ~0ull - b) throw input_error("formula value overflows 64 bits");
    return a + b;
}

unsigned long long checked_pow(unsigned long long base, int exp) {
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

SemigroupClosure::SemigroupClosure(std::vector<Transformation> elements,
                                   int generator_count)
    : elements_(std::move(elements)), generator_count_(generator_count) {
    lookup_.reserve(elements_.size() * 2);
    for (const Transformation& t : elements_) lookup_.insert(t);
}

SemigroupClosure closure(const std::vector<Transformation>& generators,
                         const Limits& lim) {
    if (generators.empty()) throw input_error("closure requires at least one generator");
    const int n = generators.front().size();
    for (const Transformation& g : generators) {
        if (g.size() != n) throw input_error("generators must act on the same state set");
    }
    const std::size_t elem_bytes = static_cast<std::size_t>(n) * sizeof(State) + 64;

    std::unordered_set<Transformation, TransformationHash> seen;
    std::vector<Transformation> order;
    seen.reserve(1024);
    for (const Transformation& g : generators) {
        if (seen.insert(g).second) order.push_back(g);
    }
    lim.check_elements(order.size(), elem_bytes);

    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const Transformation& g : generators) {
            Transformation next = compose(order[i], g);
            if (seen.insert(next).second) {
                order.push_back(std::move(next));
                lim.check_elements(order.size(), elem_bytes);
            }
        }
    }
    return SemigroupClosure(std::move(order), static_cast<int>(generators.size()));
}

long long syntactic_complexity(const Dfa& d, const Limits& lim) {
    Dfa m = minimize(d);
    return static_cast<long long>(closure(letter_transformations(m), lim).size());
}

WbfType classify_wbf(const Transformation& t) {
    const int n = t.size();
    if (n < 3) return WbfType::None;
    const State final_state = n - 2;
    const State dead = n - 1;
    if (t(dead) != dead || t(final_state) != dead) return WbfType::None;

    auto middles_into = [&](bool allow_middle, bool allow_final) {
        for (State q = 1; q <= n - 3; ++q) {
            State img = t(q);
            if (img == dead) continue;
            if (img == final_state && allow_final) continue;
            if (img >= 1 && img <= n - 3 && allow_middle) continue;
            return false;
        }
        return true;
    };

    const State z = t(0);
    if (z == dead && middles_into(true, true)) return WbfType::Type1;
    if (z == final_state && middles_into(true, false)) return WbfType::Type2;
    if (z >= 1 && z <= n - 3 && middles_into(false, true)) return WbfType::Type3;
    return WbfType::None;
}

bool is_sub_wbf(const SemigroupClosure& c) {
    for (const Transformation& t : c.elements()) {
        if (classify_wbf(t) == WbfType::None) return false;
    }
    return true;
}

unsigned long long wbf_size_formula(int n) {
    if (n < 6) throw input_error("formula requires n >= 6");
    unsigned long long a = checked_pow(n - 1, n - 3);
    unsigned long long b = checked_pow(n - 2, n - 3);
    unsigned long long c = checked_mul(n - 3, checked_pow(2, n - 3));
    return checked_add(checked_add(a, b), c);
}

std::vector<Transformation> enumerate_wbf(int n) {
    if (n < 3) throw input_error("enumeration requires n >= 3");
    const State final_state = n - 2;
    const State dead = n - 1;
    const int middles = n - 3;

    std::vector<Transformation> out;

    // Odometer over per-middle-state image domains; the rightmost position
    // advances fastest, which yields ascending target vectors.
    auto emit_all = [&](State image_of_zero, const std::vector<State>& domain) {
        std::vector<int> idx(middles, 0);
        while (true) {
            Transformation t;
            t.target.resize(n);
            t.target[0] = image_of_zero;
            t.target[final_state] = dead;
            t.target[dead] = dead;
            for (int i = 0; i < middles; ++i) t.target[1 + i] = domain[idx[i]];
            out.push_back(std::move(t));
            int pos = middles - 1;
            while (pos >= 0 && idx[pos] + 1 == static_cast<int>(domain.size())) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
    };

    std::vector<State> domain1; // Q_M u {n-2, n-1}
    for (State q = 1; q <= n - 3; ++q) domain1.push_back(q);
    domain1.push_back(final_state);
    domain1.push_back(dead);

    std::vector<State> domain2; // Q_M u {n-1}
    for (State q = 1; q <= n - 3; ++q) domain2.push_back(q);
    domain2.push_back(dead);

    std::vector<State> domain3 = {final_state, dead};

    emit_all(dead, domain1);
    emit_all(final_state, domain2);
    for (State q = 1; q <= n - 3; ++q) emit_all(q, domain3);
    return out;
}

namespace {

std::vector<std::pair<State, State>> sorted_pairs(std::set<std::pair<State, State>> s) {
    return {s.begin(), s.end()};
}

} // namespace

std::vector<std::pair<State, State>> colliding_pairs(const SemigroupClosure& c) {
    std::set<std::pair<State, State>> found;
    for (const Transformation& t : c.elements()) {
        const int n = t.size();
        const State p = t(0);
        if (p < 1 || p > n - 3) continue;
        for (State r = 1; r <= n - 3; ++r) {
            State q = t(r);
            if (q < 1 || q > n - 3 || q == p) continue;
            found.emplace(std::min(p, q), std::max(p, q));
        }
    }
    return sorted_pairs(std::move(found));
}

std::vector<std::pair<State, State>> focused_pairs(const SemigroupClosure& c) {
    std::set<std::pair<State, State>> found;
    for (const Transformation& t : c.elements()) {
        const int n = t.size();
        for (State p = 1; p <= n - 3; ++p) {
            for (State q = p + 1; q <= n - 3; ++q) {
                State img = t(p);
                if (img != t(q)) continue;
                if (img < 1 || img > n - 2) continue; // must land in Q_M u {n-2}
                found.emplace(p, q);
            }
        }
    }
    return sorted_pairs(std::move(found));
}

} // namespace bifix
