#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bifix/errors.hpp"
#include "bifix/io.hpp"
#include "bifix/witnesses.hpp"

using namespace bifix;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("serialization of the smallest unary witness") {
    CHECK(serialize_dfa(unary_free(3)) ==
          "dfa v1\n"
          "states 3\n"
          "symbols 1 a\n"
          "initial 0\n"
          "finals 1 1\n"
          "delta\n"
          "1\n"
          "2\n"
          "2\n"
          "end\n");
}

TEST_CASE("round trips are field-for-field identities") {
    for (const Dfa& d : {unary_free(3), unary_free(9), ternary_witness(9),
                         ternary_dialect(9), wstream_witness(6), atom_witness(7),
                         revmagic(6, 9), random_bifix_free(7, 4, 11)}) {
        Dfa back = parse_dfa(serialize_dfa(d));
        CHECK(back == d);
        CHECK(serialize_dfa(back) == serialize_dfa(d));
    }
}

TEST_CASE("comments and loose whitespace are tolerated") {
    Dfa d = parse_dfa(
        "# a tiny chain\n"
        "dfa v1\n"
        "states 3   # three states\n"
        "symbols 1 a\n"
        "initial 0\n"
        "finals 1 1\n"
        "delta\n"
        "  1\n"
        "\t2\n"
        "2   # dead\n"
        "end\n");
    CHECK(d == unary_free(3));
}

TEST_CASE("parse errors carry line numbers") {
    // missing delta row for state 2
    try {
        parse_dfa(
            "dfa v1\nstates 3\nsymbols 1 a\ninitial 0\nfinals 1 1\ndelta\n1\n2\nend\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 9);
        CHECK(std::string(e.what()).find("state 2") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_dfa("nfa v1\n"), parse_error);
    CHECK_THROWS_AS(parse_dfa("dfa v2\n"), parse_error);
    CHECK_THROWS_AS(
        parse_dfa("dfa v1\nstates 2\nsymbols 2 a a\ninitial 0\nfinals 0\ndelta\n0 0\n1 1\nend\n"),
        parse_error);
    CHECK_THROWS_AS(
        parse_dfa("dfa v1\nstates 2\nsymbols 1 a\ninitial 0\nfinals 0\ndelta\n5\n1\nend\n"),
        parse_error);
    CHECK_THROWS_AS(
        parse_dfa("dfa v1\nstates 2\nsymbols 1 a\ninitial 9\nfinals 0\ndelta\n0\n1\nend\n"),
        parse_error);
}

TEST_CASE("dot export of the unary witness") {
    std::string dot = export_dot(unary_free(3));
    // 3 state nodes plus the start marker; loops on the dead state are
    // collapsed into a single edge
    CHECK(dot.find("__start -> 0;") != std::string::npos);
    CHECK(dot.find("0 -> 1 [label=\"a\"];") != std::string::npos);
    CHECK(dot.find("1 -> 2 [label=\"a\"];") != std::string::npos);
    CHECK(dot.find("2 -> 2 [label=\"a\"];") != std::string::npos);
    CHECK(dot.find("xlabel=\"empty\"") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("multi-letter edges collapse into one label") {
    std::string dot = export_dot(ternary_witness(9));
    CHECK(dot.find("0 -> 8 [label=\"b,c\"];") != std::string::npos);
    CHECK(dot.find("7 -> 8 [label=\"a,b,c\"];") != std::string::npos);
}

TEST_CASE("golden files stay frozen") {
    CHECK(serialize_dfa(ternary_witness(9)) == slurp(BIFIX_GOLDEN_DIR "/ternary_9.dfa"));
    CHECK(export_dot(ternary_witness(9)) == slurp(BIFIX_GOLDEN_DIR "/ternary_9.dot"));
}
