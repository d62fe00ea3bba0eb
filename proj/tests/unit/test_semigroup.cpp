#include <doctest.h>

#include <algorithm>

#include "bifix/errors.hpp"
#include "bifix/semigroup.hpp"
#include "bifix/witnesses.hpp"
#include "support/random_dfa.hpp"

using namespace bifix;

namespace {

Transformation tf(std::vector<State> v) { return Transformation{std::move(v)}; }

} // namespace

TEST_CASE("compose is left to right") {
    Transformation t1 = tf({5, 1, 2, 3, 5, 5});
    Transformation t2 = tf({5, 2, 3, 1, 5, 5});
    Transformation got = compose(t1, t2);

    // reference: entry q is t2 applied to t1's image
    Transformation expect{std::vector<State>(6)};
    for (int q = 0; q < 6; ++q) expect.target[q] = t2.target[t1.target[q]];
    CHECK(got == expect);
    CHECK(got == tf({5, 2, 3, 1, 5, 5}));
    CHECK(got.target[1] == 2);

    CHECK(compose(t1, identity(6)) == t1);
    CHECK(compose(identity(6), t1) == t1);
    CHECK_THROWS_AS(compose(t1, identity(4)), input_error);
}

TEST_CASE("letter composition matches word application") {
    Dfa d = ternary_witness(9);
    auto letters = letter_transformations(d);
    for (int a = 0; a < d.symbol_count(); ++a) {
        for (int b = 0; b < d.symbol_count(); ++b) {
            Transformation ab = compose(letters[a], letters[b]);
            for (State q = 0; q < d.state_count(); ++q)
                CHECK(ab(q) == apply_word(d, q, Word{a, b}));
        }
    }
}

TEST_CASE("closure of the unary chain") {
    SemigroupClosure c = closure(letter_transformations(unary_free(5)));
    CHECK(c.size() == 4);
    CHECK(syntactic_complexity(unary_free(5)) == 4);
}

TEST_CASE("closure is closed under composition") {
    SemigroupClosure c = closure(letter_transformations(wstream_witness(6)));
    const auto& els = c.elements();
    for (std::size_t i = 0; i < els.size(); i += 17) {
        for (std::size_t j = 0; j < els.size(); j += 23) {
            CHECK(c.contains(compose(els[i], els[j])));
        }
    }
}

TEST_CASE("syntactic complexity of the superexponential witness") {
    CHECK(syntactic_complexity(wstream_witness(6)) == 213);
    CHECK(wbf_size_formula(6) == 213);
    CHECK(wbf_size_formula(7) == 1985);
    CHECK(wbf_size_formula(9) == 380177);
    CHECK_THROWS_AS(wbf_size_formula(5), input_error);
}

TEST_CASE("element cap aborts the closure") {
    Limits lim;
    lim.max_elements = 100;
    CHECK_THROWS_AS(closure(letter_transformations(wstream_witness(6)), lim),
                    resource_error);
}

TEST_CASE("type classification") {
    CHECK(classify_wbf(tf({5, 1, 2, 3, 5, 5})) == WbfType::Type1);
    CHECK(classify_wbf(tf({4, 5, 5, 5, 5, 5})) == WbfType::Type2);
    CHECK(classify_wbf(tf({2, 4, 5, 4, 5, 5})) == WbfType::Type3);
    CHECK(classify_wbf(identity(6)) == WbfType::None);
    CHECK(classify_wbf(tf({1, 2, 3, 4, 5, 5})) == WbfType::None); // chain collides
}

TEST_CASE("sub-wbf membership") {
    CHECK(is_sub_wbf(closure(letter_transformations(ternary_witness(9)))));
    CHECK(is_sub_wbf(closure(letter_transformations(wstream_witness(6)))));
    CHECK_FALSE(is_sub_wbf(closure({identity(6)})));
}

TEST_CASE("direct enumeration matches the closure of the witness") {
    std::vector<Transformation> everything = enumerate_wbf(6);
    CHECK(everything.size() == 213);

    SemigroupClosure c = closure(letter_transformations(wstream_witness(6)));
    std::vector<Transformation> from_closure(c.elements());
    std::sort(from_closure.begin(), from_closure.end());
    std::vector<Transformation> enumerated = everything;
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(from_closure == enumerated);
}

TEST_CASE("colliding pairs") {
    SemigroupClosure full(enumerate_wbf(6), 213);
    CHECK(colliding_pairs(full).empty());

    SemigroupClosure single = closure({tf({1, 2, 5, 5, 5, 5})});
    auto pairs = colliding_pairs(single);
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(1, 2)) != pairs.end());

    // type-1 only generators map 0 to the dead state: nothing collides
    SemigroupClosure t1 = closure({tf({5, 2, 3, 1, 5, 5}), tf({5, 1, 1, 4, 5, 5})});
    CHECK(colliding_pairs(t1).empty());
}

TEST_CASE("focused pairs") {
    SemigroupClosure full(enumerate_wbf(6), 213);
    auto pairs = focused_pairs(full);
    CHECK(pairs == std::vector<std::pair<State, State>>{{1, 2}, {1, 3}, {2, 3}});

    SemigroupClosure fuse = closure({tf({5, 3, 3, 5, 5, 5})});
    auto fused = focused_pairs(fuse);
    CHECK(std::find(fused.begin(), fused.end(), std::make_pair(1, 2)) != fused.end());

    SemigroupClosure chain = closure(letter_transformations(unary_free(6)));
    CHECK(focused_pairs(chain).empty());
}

TEST_CASE("every element of a random witness semigroup keeps suffixes safe") {
    // membership in the three types implies: a live image of a non-initial
    // state never coincides with the image of the initial state
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 3);
        Dfa d = random_bifix_free(n, 2 + seed % 2, seed * 3 + 7);
        SemigroupClosure c = closure(letter_transformations(d));
        CHECK(is_sub_wbf(c));
        for (const Transformation& t : c.elements()) {
            for (State q = 1; q < n; ++q) {
                if (t(q) != n - 1) CHECK(t(0) != t(q));
            }
        }
    }
}

TEST_CASE("syntactic complexity never exceeds the formula") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 6 + static_cast<int>(seed % 2);
        Dfa d = random_bifix_free(n, 3, seed * 13 + 1);
        CHECK(syntactic_complexity(d) <=
              static_cast<long long>(wbf_size_formula(n)));
    }
}
