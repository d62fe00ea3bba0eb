#include "bifix/witnesses.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"
#include "bifix/minimize.hpp"
#include "bifix/ops.hpp"

namespace bifix {

namespace {

// A growing transition table: one target vector per letter.
struct Builder {
    int n;
    std::vector<std::string> names;
    std::vector<std::vector<State>> columns;

    void add(std::string name, std::vector<State> targets) {
        names.push_back(std::move(name));
        columns.push_back(std::move(targets));
    }

    Dfa build(State initial, std::vector<State> finals) const {
        const int k = static_cast<int>(columns.size());
        std::vector<State> delta(static_cast<std::size_t>(n) * k);
        for (State q = 0; q < n; ++q)
            for (int a = 0; a < k; ++a)
                delta[static_cast<std::size_t>(q) * k + a] = columns[a][q];
        return Dfa(n, names, std::move(delta), initial, std::move(finals));
    }
};

std::string zero_padded(int value, int width) {
    std::string s = std::to_string(value);
    if (static_cast<int>(s.size()) < width)
        s.insert(s.begin(), width - s.size(), '0');
    return s;
}

// Unbiased uniform draw from [0, bound) with a fixed rejection scheme, so
// results do not depend on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

unsigned long long checked_pow_u64(unsigned long long base, int exp) {
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > ~0ull / base)
            throw input_error("type weights overflow 64 bits; use a smaller n");
        r *= base;
    }
    return r;
}

} // namespace

Dfa unary_free(int n) {
    if (n < 3) throw input_error("unary witness requires n >= 3");
    std::vector<State> chain(n);
    for (State q = 0; q < n - 1; ++q) chain[q] = q + 1;
    chain[n - 1] = n - 1;
    Builder b{n, {}, {}};
    b.add("a", std::move(chain));
    return b.build(0, {n - 2});
}

Dfa ternary_witness(int n) {
    if (n < 7) throw input_error("ternary witness requires n >= 7");
    const int h = (n - 1) / 2;
    const State fin = n - 2, dead = n - 1;

    std::vector<State> a(n), b(n), c(n);
    a[0] = 1;
    for (State q = 1; q <= n - 3; ++q) a[q] = fin;
    a[fin] = dead;
    a[dead] = dead;

    b[0] = dead;
    for (State q = 1; q <= n - 4; ++q) b[q] = q + 1;
    b[n - 3] = 1;
    b[fin] = dead;
    b[dead] = dead;

    c[0] = dead;
    c[fin] = dead;
    c[dead] = dead;
    c[1] = h;
    c[h] = fin;
    std::vector<State> cycle; // n-3, ..., h+1, h-1, ..., 2
    for (State q = n - 3; q >= h + 1; --q) cycle.push_back(q);
    for (State q = h - 1; q >= 2; --q) cycle.push_back(q);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) c[cycle[i]] = cycle[i + 1];
    if (!cycle.empty()) c[cycle.back()] = cycle.front();

    Builder builder{n, {}, {}};
    builder.add("a", std::move(a));
    builder.add("b", std::move(b));
    builder.add("c", std::move(c));
    return builder.build(0, {fin});
}

Dfa ternary_dialect(int n) {
    return dialect(ternary_witness(n), {{"a", "a"}, {"b", "c"}, {"c", "b"}});
}

Dfa wstream_witness(int n, std::size_t max_letters) {
    if (n < 6) throw input_error("wstream witness requires n >= 6");
    const State fin = n - 2, dead = n - 1;
    const int middles = n - 3;

    unsigned long long letters = checked_pow_u64(n - 2, middles) - 1 +
                                 static_cast<unsigned long long>(middles) *
                                     (checked_pow_u64(2, middles) - 1) +
                                 middles;
    if (letters > max_letters)
        throw input_error("wstream alphabet has " + std::to_string(letters) +
                          " letters, above the cap of " + std::to_string(max_letters));

    Builder b{n, {}, {}};
    b.names.reserve(letters);
    b.columns.reserve(letters);

    for (State i = 1; i <= middles; ++i) {
        std::vector<State> t(n);
        t[0] = dead;
        for (State q = 1; q <= middles; ++q) t[q] = (q == i) ? fin : q;
        t[fin] = dead;
        t[dead] = dead;
        b.add("b" + std::to_string(i), std::move(t));
    }

    // Odometer over per-middle images; rightmost fastest gives ascending
    // target vectors. The excluded transformation (all middles to the dead
    // state) is the lexicographically last one of each block.
    auto emit_block = [&](State image_of_zero, const std::vector<State>& domain,
                          char prefix, int& counter) {
        std::vector<int> idx(middles, 0);
        while (true) {
            bool all_last = true;
            for (int i = 0; i < middles; ++i)
                if (idx[i] != static_cast<int>(domain.size()) - 1) { all_last = false; break; }
            if (!all_last) {
                std::vector<State> t(n);
                t[0] = image_of_zero;
                t[fin] = dead;
                t[dead] = dead;
                for (int i = 0; i < middles; ++i) t[1 + i] = domain[idx[i]];
                b.add(prefix + zero_padded(++counter, 6), std::move(t));
            }
            int pos = middles - 1;
            while (pos >= 0 && idx[pos] + 1 == static_cast<int>(domain.size())) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
    };

    std::vector<State> domain2; // Q_M u {n-1}
    for (State q = 1; q <= middles; ++q) domain2.push_back(q);
    domain2.push_back(dead);
    int c_counter = 0;
    emit_block(fin, domain2, 'c', c_counter);

    std::vector<State> domain3 = {fin, dead};
    int d_counter = 0;
    for (State q = 1; q <= middles; ++q) emit_block(q, domain3, 'd', d_counter);

    return b.build(0, {fin});
}

Dfa atom_witness(int n) {
    if (n < 6) throw input_error("atom witness requires n >= 6");
    const State fin = n - 2, dead = n - 1;
    Builder b{n, {}, {}};

    std::vector<State> a(n, dead);
    a[0] = 1;
    b.add("a", std::move(a));

    auto middle_letter = [&](auto&& tweak) {
        std::vector<State> t(n);
        for (State q = 0; q < n; ++q) t[q] = q;
        t[0] = dead;
        t[fin] = dead;
        tweak(t);
        return t;
    };

    b.add("b", middle_letter([](std::vector<State>& t) { std::swap(t[1], t[2]); }));
    b.add("c", middle_letter([n](std::vector<State>& t) {
              for (State q = 1; q <= n - 4; ++q) t[q] = q + 1;
              t[n - 3] = 1;
          }));
    b.add("d", middle_letter([](std::vector<State>& t) { t[2] = 1; }));
    for (State q = 1; q <= n - 3; ++q) {
        b.add("e" + std::to_string(q),
              middle_letter([q, fin](std::vector<State>& t) { t[q] = fin; }));
    }
    return b.build(0, {fin});
}

Dfa revmagic(int n, long long alpha) {
    if (n < 3) throw input_error("reversal witness requires n >= 3");
    if (!reverse_range(n).contains(alpha))
        throw input_error("alpha outside the attainable reversal range");
    if (n == 3) return unary_free(3); // {a}: its reverse also has 3 states

    if (alpha < n) {
        // An alpha-state language whose reversal has n states; reading it
        // backwards gives the requested pair (n states, reversal alpha).
        Dfa smaller = revmagic(static_cast<int>(alpha), n);
        return bifix_convention(reverse(smaller));
    }

    const State fin = n - 2, dead = n - 1;
    const int middles = n - 3;
    Builder b{n, {}, {}};

    for (State q = 1; q <= middles; ++q) {
        std::vector<State> t(n, dead);
        t[0] = q;
        b.add("a" + std::to_string(q), std::move(t));
    }

    std::vector<std::uint64_t> masks;
    masks.push_back(0);
    for (int i = 0; i < middles; ++i) masks.push_back(std::uint64_t{1} << i);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << middles); ++m) {
        if ((m & (m - 1)) != 0) masks.push_back(m); // skip singletons, already in
    }
    masks.resize(static_cast<std::size_t>(alpha) - 2);

    int counter = 0;
    for (std::uint64_t mask : masks) {
        std::vector<State> t(n, dead);
        for (int i = 0; i < middles; ++i)
            if (mask & (std::uint64_t{1} << i)) t[1 + i] = fin;
        b.add("b" + std::to_string(++counter), std::move(t));
    }
    return b.build(0, {fin});
}

Dfa dialect(const Dfa& d,
            const std::vector<std::pair<std::string, std::string>>& mapping) {
    std::unordered_set<std::string> domain, range;
    for (const auto& [letter, source] : mapping) {
        if (!domain.insert(letter).second)
            throw input_error("dialect mapping lists letter twice: " + letter);
        if (!range.insert(source).second)
            throw input_error("dialect mapping is not injective at: " + source);
        if (d.symbol_index(letter) < 0)
            throw input_error("dialect mapping names unknown letter: " + letter);
        if (d.symbol_index(source) < 0)
            throw input_error("dialect mapping names unknown source letter: " + source);
    }

    Builder b{d.state_count(), {}, {}};
    for (int a = 0; a < d.symbol_count(); ++a) {
        const std::string& name = d.symbol_name(a);
        auto it = std::find_if(mapping.begin(), mapping.end(),
                               [&](const auto& p) { return p.first == name; });
        if (it == mapping.end()) continue; // deleted letter
        int src = d.symbol_index(it->second);
        std::vector<State> t(d.state_count());
        for (State q = 0; q < d.state_count(); ++q) t[q] = d.next(q, src);
        b.add(name, std::move(t));
    }
    return b.build(d.initial(), d.finals());
}

Dfa random_bifix_free(int n, int k, std::uint64_t seed) {
    if (n < 3) throw input_error("random witness requires n >= 3");
    if (k < 1) throw input_error("random witness requires k >= 1");
    const State fin = n - 2, dead = n - 1;
    const int middles = n - 3;

    const unsigned long long w1 = checked_pow_u64(n - 1, middles);
    const unsigned long long w2 = checked_pow_u64(n - 2, middles);
    const unsigned long long w3 =
        static_cast<unsigned long long>(middles) * checked_pow_u64(2, middles);
    const unsigned long long total = w1 + w2 + w3;

    std::mt19937_64 rng(seed);
    auto sample_letter = [&]() {
        std::vector<State> t(n);
        t[fin] = dead;
        t[dead] = dead;
        const std::uint64_t pick = uniform_below(rng, total);
        if (pick < w1) {
            t[0] = dead;
            // middles map anywhere but 0: {1, ..., n-1}
            for (State q = 1; q <= middles; ++q)
                t[q] = 1 + static_cast<State>(uniform_below(rng, n - 1));
        } else if (pick < w1 + w2) {
            t[0] = fin;
            for (State q = 1; q <= middles; ++q) {
                State img = 1 + static_cast<State>(uniform_below(rng, n - 2));
                t[q] = (img <= middles) ? img : dead;
            }
        } else {
            t[0] = 1 + static_cast<State>(uniform_below(rng, middles));
            for (State q = 1; q <= middles; ++q)
                t[q] = fin + static_cast<State>(uniform_below(rng, 2));
        }
        return t;
    };

    for (int attempt = 0; attempt < 1000; ++attempt) {
        Builder b{n, {}, {}};
        for (int j = 0; j < k; ++j) {
            std::string name = (k <= 26) ? std::string(1, static_cast<char>('a' + j))
                                         : "g" + std::to_string(j + 1);
            b.add(std::move(name), sample_letter());
        }
        Dfa candidate = b.build(0, {fin});
        if (state_complexity(candidate) == n) return candidate;
    }
    throw generation_error("no minimal sample found in 1000 attempts for n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
}

} // namespace bifix
