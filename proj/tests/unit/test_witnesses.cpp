#include <doctest.h>

#include "bifix/errors.hpp"
#include "bifix/freeness.hpp"
#include "bifix/minimize.hpp"
#include "bifix/ops.hpp"
#include "bifix/semigroup.hpp"
#include "bifix/witnesses.hpp"
#include "support/oracles.hpp"

using namespace bifix;

TEST_CASE("unary witness") {
    Dfa d3 = unary_free(3);
    CHECK(testing::accepts(d3, Word{0}));
    CHECK_FALSE(testing::accepts(d3, Word{0, 0}));
    CHECK_FALSE(testing::accepts(d3, Word{}));

    Dfa d5 = unary_free(5);
    auto words = testing::enumerate_accepted(d5, 10, 100);
    REQUIRE(words);
    CHECK(*words == std::vector<Word>{Word(3, 0)});
    CHECK(state_complexity(d5) == 5);
    CHECK(is_bifix_free(d5));
    CHECK_THROWS_AS(unary_free(2), input_error);

    CHECK(concat(unary_free(4), unary_free(6)).state_count() == 8);
}

TEST_CASE("ternary witness transitions at n=9") {
    Dfa d = ternary_witness(9);
    const int a = d.symbol_index("a"), b = d.symbol_index("b"), c = d.symbol_index("c");

    // h = 4; c acts as (1->4)(4->7) plus the cycle (6,5,3,2), rest to dead
    CHECK(d.next(1, c) == 4);
    CHECK(d.next(4, c) == 7);
    CHECK(d.next(6, c) == 5);
    CHECK(d.next(5, c) == 3);
    CHECK(d.next(3, c) == 2);
    CHECK(d.next(2, c) == 6);
    CHECK(d.next(0, c) == 8);
    CHECK(d.next(7, c) == 8);
    CHECK(d.next(8, c) == 8);

    CHECK(d.next(0, a) == 1);
    for (State q = 1; q <= 6; ++q) CHECK(d.next(q, a) == 7);
    CHECK(d.next(0, b) == 8);
    for (State q = 1; q <= 5; ++q) CHECK(d.next(q, b) == q + 1);
    CHECK(d.next(6, b) == 1);

    CHECK_THROWS_AS(ternary_witness(6), input_error);
}

TEST_CASE("ternary witness properties") {
    for (int n : {7, 8, 9, 10}) {
        Dfa d = ternary_witness(n);
        CHECK(state_complexity(d) == n);
        CHECK(is_bifix_free(d));
        CHECK(is_sub_wbf(closure(letter_transformations(d))));
    }
}

TEST_CASE("ternary dialect swaps the b and c actions") {
    Dfa w = ternary_witness(9);
    Dfa d = ternary_dialect(9);
    CHECK(d.alphabet() == w.alphabet());
    const int b = w.symbol_index("b"), c = w.symbol_index("c");
    for (State q = 0; q < 9; ++q) {
        CHECK(d.next(q, b) == w.next(q, c));
        CHECK(d.next(q, c) == w.next(q, b));
    }
    CHECK(boolean(w, d, BooleanOp::SymmetricDifference).state_count() == 63);
}

TEST_CASE("wstream witness alphabet size") {
    CHECK(wstream_witness(6).symbol_count() == 87);
    CHECK(wstream_witness(7).symbol_count() == 688);
    CHECK(wstream_witness(8).symbol_count() == 7935);
    CHECK_THROWS_AS(wstream_witness(5), input_error);
    CHECK_THROWS_AS(wstream_witness(9), input_error); // over the default cap
}

TEST_CASE("wstream witness properties at n=6") {
    Dfa d = wstream_witness(6);
    CHECK(state_complexity(d) == 6);
    CHECK(is_bifix_free(d));
    CHECK(syntactic_complexity(d) == 213);

    // letter names are canonical: b1..b3, then zero-padded c and d blocks
    CHECK(d.symbol_name(0) == "b1");
    CHECK(d.symbol_name(2) == "b3");
    CHECK(d.symbol_name(3) == "c000001");
    CHECK(d.symbol_name(3 + 63) == "d000001");
    CHECK(d.symbol_name(86) == "d000021");
}

TEST_CASE("atom witness shape") {
    Dfa d = atom_witness(6);
    CHECK(d.symbol_count() == 7);
    CHECK(d.alphabet() == std::vector<std::string>{"a", "b", "c", "d", "e1", "e2", "e3"});
    CHECK(state_complexity(d) == 6);
    CHECK(is_bifix_free(d));
    CHECK(is_sub_wbf(closure(letter_transformations(d))));
    CHECK(atom_witness(9).symbol_count() == 10);
    CHECK_THROWS_AS(atom_witness(5), input_error);
}

TEST_CASE("revmagic reaches the whole range at n=6") {
    CHECK(reverse(revmagic(6, 10)).state_count() == 10);
    CHECK(reverse(revmagic(6, 6)).state_count() == 6);
    CHECK(reverse(revmagic(6, 5)).state_count() == 5);
    CHECK_THROWS_AS(revmagic(6, 4), input_error);
    CHECK_THROWS_AS(revmagic(6, 11), input_error);
}

TEST_CASE("revmagic outputs are bifix-free witnesses") {
    for (long long alpha : {5, 6, 8, 10}) {
        Dfa d = revmagic(6, alpha);
        CHECK(d.state_count() == 6);
        CHECK(state_complexity(d) == 6);
        CHECK(is_bifix_free(d));
        CHECK(is_sub_wbf(closure(letter_transformations(d))));
    }
}

TEST_CASE("dialect examples") {
    // identity mapping returns the same automaton
    Dfa w = ternary_witness(7);
    CHECK(dialect(w, {{"a", "a"}, {"b", "b"}, {"c", "c"}}) == w);

    // L = {a, ab, abc}: a gets b's role, b gets a's, c disappears -> {b, ba}
    Dfa l(5, {"a", "b", "c"},
          {1, 4, 4,   // 0: a->1
           4, 2, 4,   // 1: b->2
           4, 4, 3,   // 2: c->3
           4, 4, 4,   // 3
           4, 4, 4},  // 4 dead
          0, {1, 2, 3});
    Dfa swapped = dialect(l, {{"a", "b"}, {"b", "a"}});
    CHECK(swapped.symbol_count() == 2);
    auto words = testing::enumerate_accepted(swapped, 6, 100);
    REQUIRE(words);
    const int a = swapped.symbol_index("a"), b = swapped.symbol_index("b");
    CHECK(*words == std::vector<Word>{Word{b}, Word{b, a}});

    CHECK_THROWS_AS(dialect(l, {{"a", "b"}, {"b", "b"}}), input_error); // not injective
    CHECK_THROWS_AS(dialect(l, {{"z", "a"}}), input_error);             // unknown letter
}

TEST_CASE("random bifix-free generator") {
    Dfa d1 = random_bifix_free(6, 3, 42);
    Dfa d2 = random_bifix_free(6, 3, 42);
    CHECK(d1 == d2); // fully deterministic, not merely isomorphic
    CHECK(state_complexity(d1) == 6);
    CHECK(is_bifix_free(d1));

    Dfa other = random_bifix_free(6, 3, 43);
    CHECK(other.state_count() == 6);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4);
        Dfa d = random_bifix_free(n, 2 + seed % 3, seed);
        CHECK(state_complexity(d) == n);
        CHECK(is_bifix_free(d));
        CHECK(is_sub_wbf(closure(letter_transformations(d))));
    }
}

TEST_CASE("generators keep the conventional layout") {
    for (const Dfa& d : {unary_free(5), ternary_witness(9), wstream_witness(6),
                         atom_witness(7), revmagic(6, 7), revmagic(7, 6),
                         random_bifix_free(6, 3, 7)}) {
        const int n = d.state_count();
        CHECK(d.initial() == 0);
        CHECK(d.finals() == std::vector<State>{n - 2});
        CHECK(find_empty_state(d) == std::optional<State>(n - 1));
    }
}
