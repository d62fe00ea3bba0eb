#include <doctest.h>

#include "bifix/determinize.hpp"
#include "bifix/errors.hpp"
#include "bifix/minimize.hpp"
#include "bifix/ops.hpp"
#include "bifix/witnesses.hpp"
#include "support/oracles.hpp"
#include "support/random_dfa.hpp"

using namespace bifix;

TEST_CASE("determinizing an embedded DFA gives back its reachable part") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Dfa d = testing::random_dfa(6, 2, seed);
        Dfa det = determinize(nfa_of(d));
        CHECK(is_isomorphic(canonical_form(det), canonical_form(d)));
    }
}

TEST_CASE("star powerset of the unary witness") {
    // {aaa}* is the multiples-of-three language: 3 states
    Dfa s = minimize(determinize(star_nfa(unary_free(5))));
    CHECK(s.state_count() == 3);
    for (int len = 0; len <= 12; ++len)
        CHECK(testing::accepts(s, Word(len, 0)) == (len % 3 == 0));
}

TEST_CASE("reversal powerset of the ternary witness") {
    Dfa r = minimize(determinize(reversal_nfa(ternary_witness(9))));
    CHECK(r.state_count() == 66);
}

TEST_CASE("epsilon closure chases chains") {
    // 0 -eps-> 1 -a-> 2(final): the language is exactly {a}
    Nfa nfa(3, {"a"}, {{{}}, {{2}}, {{}}}, {{1}, {}, {}}, {0}, {2});
    Dfa d = determinize(nfa);
    CHECK_FALSE(testing::accepts(d, Word{}));
    CHECK(testing::accepts(d, Word{0}));
    CHECK_FALSE(testing::accepts(d, Word{0, 0}));
}

TEST_CASE("state cap aborts the construction") {
    Limits lim;
    lim.max_states = 16;
    CHECK_THROWS_AS(determinize(reversal_nfa(ternary_witness(10)), lim), resource_error);
}
