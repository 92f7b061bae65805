#include "doctest.h"

#include "support.hpp"

using namespace crnscope;
using namespace crnscope::testing;

TEST_CASE("fire applies c - in(r) + out(r)") {
    Crn toy = load_corpus("shinar_toy");
    CHECK(fire(toy, cfg(toy, "2A + B"), 0) == cfg(toy, "A + 2B"));

    Crn idle = parse_crn("r: A -> A\n");
    CHECK(fire(idle, cfg(idle, "3A"), 0) == cfg(idle, "3A"));

    Crn recurr = load_corpus("recurr");
    CHECK(fire(recurr, cfg(recurr, "A + C"), 0) == cfg(recurr, "E + C"));
}

TEST_CASE("fire names the deficient species") {
    Crn toy = load_corpus("shinar_toy");
    try {
        fire(toy, cfg(toy, "2A"), 0);
        FAIL("expected NotEnabled");
    } catch (const NotEnabled& e) {
        CHECK(e.reaction() == 0);
        CHECK(e.species() == *toy.species_index("B"));
        CHECK(e.position() == 0);
    }
}

TEST_CASE("fire_sequence") {
    Crn toy = load_corpus("shinar_toy");
    CHECK(fire_sequence(toy, cfg(toy, "2A + B"), seq(toy, "aabb")) == cfg(toy, "2A + B"));
    CHECK(fire_sequence(toy, cfg(toy, "2A + B"), {}) == cfg(toy, "2A + B"));

    Crn recurr = load_corpus("recurr");
    CHECK(fire_sequence(recurr, cfg(recurr, "A + C"), seq(recurr, "abd")) == cfg(recurr, "A + C"));

    try {
        fire_sequence(toy, cfg(toy, "2A + B"), seq(toy, "bb"));
        FAIL("expected NotEnabled");
    } catch (const NotEnabled& e) {
        CHECK(e.position() == 1);
        CHECK(e.reaction() == 1);
    }
}

TEST_CASE("parikh counts occurrences") {
    Crn toy = load_corpus("shinar_toy");
    CHECK(parikh(toy, seq(toy, "aabb")).counts() == std::vector<BigInt>{2, 2});
    CHECK(parikh(toy, {}).counts() == std::vector<BigInt>{0, 0});

    Crn lit = load_corpus("from_lit");
    ParikhVector v1 = parikh(lit, seq(lit, "gfce"));
    CHECK(v1.support() == reactions_named(lit, {"c", "e", "f", "g"}));
    for (std::size_t r : v1.support()) {
        CHECK(v1[r] == 1);
    }
}

TEST_CASE("resolve_sequence accepts separators and glued names") {
    Crn n = load_corpus("intro_n");
    CHECK(seq(n, "alpha1 alpha5") == seq(n, "alpha1,alpha5"));
    CHECK(seq(n, "alpha1alpha5") == std::vector<std::size_t>{0, 4});
    CHECK_THROWS(seq(n, "alpha9"));
}

TEST_CASE("ComplexVector normalizes its entries") {
    ComplexVector c = ComplexVector::from_entries({{2, 1}, {0, 3}, {2, 1}, {1, 0}});
    CHECK(c.entries() == std::vector<ComplexVector::Entry>{{0, 3}, {2, 2}});
    CHECK(c.support() == std::vector<std::size_t>{0, 2});
    CHECK(c.total() == 5);
    CHECK_THROWS_AS(ComplexVector::from_entries({{0, -1}}), ModelError);

    ComplexVector a = ComplexVector::single(0);
    CHECK(entrywise_le(a, c));
    CHECK(entrywise_lt(a, c));
    CHECK(entrywise_le(c, c));
    CHECK_FALSE(entrywise_lt(c, c));
    CHECK_FALSE(entrywise_le(ComplexVector::single(1), c));
    CHECK(entrywise_le(ComplexVector{}, a));
}

TEST_CASE("Crn validates names and indices") {
    CHECK_THROWS_AS(Crn({"A", "A"}, {}), ModelError);
    CHECK_THROWS_AS(Crn({"A"}, {Reaction{"r", ComplexVector::single(3), {}}}), ModelError);
    CHECK_THROWS_AS(
        Crn({"A"}, {Reaction{"r", ComplexVector::single(0), {}}, Reaction{"r", {}, ComplexVector::single(0)}}),
        ModelError);
}

TEST_CASE("format_complex") {
    Crn toy = load_corpus("shinar_toy");
    CHECK(format_complex(toy, cfg(toy, "B + 2A")) == "2A + B");
    CHECK(format_complex(toy, ComplexVector{}) == "0");
}

TEST_CASE("displacement identity on random runs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Crn crn = random_crn(rng, {4, 6, 3});
        MatrixBundle m = build_matrices(crn);
        ComplexVector c = random_configuration(rng, crn.species_count(), 4);
        auto tau = random_run(rng, crn, c, 12);
        ComplexVector end = fire_sequence(crn, c, tau);
        RationalVector delta = m.incidence_I.apply(to_rational(parikh(crn, tau)));
        for (std::size_t s = 0; s < crn.species_count(); ++s) {
            CHECK(Rational(end.count(s)) == Rational(c.count(s)) + delta[s]);
        }
        bool returns = end == c;
        bool invariant = is_zero_vector(delta);
        CHECK(returns == invariant);
    }
}
