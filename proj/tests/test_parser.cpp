#include "doctest.h"

#include "support.hpp"

using namespace crnscope;
using namespace crnscope::testing;

namespace {

SourceSpan span_of(std::string_view text) {
    try {
        parse_crn(text);
    } catch (const ParseError& e) {
        return e.span();
    }
    FAIL("expected ParseError");
    return {};
}

}  // namespace

TEST_CASE("running example") {
    Crn crn = parse_crn("a: A + B -> 2B\nb: B -> A");
    REQUIRE(crn.species_count() == 2);
    REQUIRE(crn.reaction_count() == 2);
    CHECK(crn.species()[0].name == "A");
    CHECK(crn.species()[1].name == "B");
    CHECK(crn.reactions()[0].reactant == cfg(crn, "A + B"));
    CHECK(crn.reactions()[0].product == cfg(crn, "2B"));
    CHECK(crn.reactions()[1].reactant == cfg(crn, "B"));
    CHECK(crn.reactions()[1].product == cfg(crn, "A"));
}

TEST_CASE("empty complex and reversible sugar") {
    Crn src = parse_crn("r: 0 -> A\n");
    CHECK(src.reactions()[0].reactant.empty());

    Crn rev = parse_crn("x: A <-> B\n");
    REQUIRE(rev.reaction_count() == 2);
    CHECK(rev.reactions()[0].name == "x.fwd");
    CHECK(rev.reactions()[1].name == "x.rev");
    CHECK(rev.reactions()[1].reactant == cfg(rev, "B"));
}

TEST_CASE("comments, blank lines and whitespace") {
    Crn crn = parse_crn("# header\n\n  a :A+B->  2 B \r\n\t# note\nb:B->A\n");
    CHECK(crn.reaction_count() == 2);
    CHECK(crn.reactions()[0].product == cfg(crn, "2B"));
}

TEST_CASE("syntax errors carry spans") {
    SourceSpan s = span_of("a: A -> B\nb A -> B\n");
    CHECK(s.line == 2);
    CHECK(s.column_start == 3);

    CHECK(span_of("a: A -> \n").line == 1);
    CHECK(span_of("a: A => B\n").column_start == 6);
    CHECK(span_of("a: 0A -> B\n").column_start == 4);
    CHECK(span_of("a: A -> B\na: B -> A\n").line == 2);
    CHECK(span_of("x: A <-> B\nx.fwd: A -> B\n").line == 2);
    CHECK(span_of("1a: A -> B\n").column_start == 1);
    CHECK(span_of("a: A + -> B\n").line == 1);
    CHECK(span_of("a: A -> B # trailing\n").line == 1);
}

TEST_CASE("diagnostic format") {
    try {
        parse_crn("a: A -> B\nb: A -> ?\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.diagnostic("net.crn").rfind("net.crn:2:9: ", 0) == 0);
    }
}

TEST_CASE("counts are decimal") {
    Crn crn = parse_crn("a: 010A -> B\n");
    CHECK(crn.reactions()[0].reactant.count(0) == 10);
    Crn big = parse_crn("a: 123456789012345678901234567890A -> B\n");
    CHECK(big.reactions()[0].reactant.count(0) == BigInt("123456789012345678901234567890", 10));
}

TEST_CASE("parse_configuration") {
    Crn toy = load_corpus("shinar_toy");
    ComplexVector c = parse_configuration("2A + B", toy);
    CHECK(c.count(0) == 2);
    CHECK(c.count(1) == 1);
    CHECK(parse_configuration("0", toy).empty());
    CHECK_THROWS_AS(parse_configuration("A + Q", toy), ParseError);
    CHECK_THROWS_AS(parse_configuration("A +", toy), ParseError);

    Crn recurr = load_corpus("recurr");
    ComplexVector ac = parse_configuration("A + C", recurr);
    CHECK(ac.total() == 2);
    CHECK(ac.count(*recurr.species_index("A")) == 1);
    CHECK(ac.count(*recurr.species_index("C")) == 1);
}

TEST_CASE("serialize_crn") {
    CHECK(serialize_crn(load_corpus("shinar_toy")) == "a: A + B -> 2B\nb: B -> A\n");
    CHECK(serialize_crn(Crn{}) == "");
    std::string two = serialize_crn(load_corpus("two_out"));
    CHECK(two.find("a: A + B -> 2A\n") != std::string::npos);
    CHECK(two.find("b: A + B -> 2B\n") != std::string::npos);
    CHECK(serialize_crn(parse_crn("x: A <-> 2B\n")) == "x: A <-> 2B\n");
    CHECK(serialize_crn(parse_crn("r: 0 -> A\n")) == "r: 0 -> A\n");
}

TEST_CASE("round trip on corpus and random networks") {
    for (const auto& name : corpus_names()) {
        Crn crn = load_corpus(name);
        CHECK(parse_crn(serialize_crn(crn)) == crn);
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Crn parsed = parse_crn(serialize_crn(random_crn(rng)));
        CHECK(parse_crn(serialize_crn(parsed)) == parsed);
    }
}

TEST_CASE("parsing is total on mutated input") {
    const std::string alphabet = "AB01 +-><:#\n\r\t_.x29";
    std::mt19937_64 rng(3);
    std::string base = serialize_crn(load_corpus("not_silent"));
    for (int i = 0; i < 3000; ++i) {
        std::string text = base;
        int edits = 1 + static_cast<int>(rng() % 6);
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = rng() % (text.size() + 1);
            switch (rng() % 3) {
                case 0:
                    text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
                    break;
                case 1:
                    if (pos < text.size()) {
                        text.erase(pos, 1);
                    }
                    break;
                default:
                    if (pos < text.size()) {
                        text[pos] = static_cast<char>(rng() % 256);
                    }
            }
        }
        try {
            Crn crn = parse_crn(text);
            CHECK(parse_crn(serialize_crn(crn)) == crn);
        } catch (const ParseError& e) {
            CHECK(e.span().line >= 1);
            CHECK(e.span().column_start <= e.span().column_end);
        }
    }
}
