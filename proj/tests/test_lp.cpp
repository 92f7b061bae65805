#include "doctest.h"

#include "support.hpp"

using namespace crnscope;
using namespace crnscope::testing;

namespace {

FeasibilityQuery random_query(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
    FeasibilityQuery q{RationalMatrix(rows, cols), {}, {}};
    std::uniform_int_distribution<int> entry(-spread, spread);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            q.matrix(r, c) = entry(rng);
        }
    }
    for (std::size_t c = 0; c < cols; ++c) {
        switch (rng() % 4) {
            case 0:
                q.zero_set.push_back(c);
                break;
            case 1:
                q.one_set.push_back(c);
                break;
            default:
                break;
        }
    }
    return q;
}

}  // namespace

TEST_CASE("full support invariants of the running example") {
    MatrixBundle m = build_matrices(load_corpus("shinar_toy"));
    FeasibilityResult cols = full_support_feasible(m.incidence_I, InvariantSide::Columns);
    REQUIRE(cols.feasible());
    CHECK(*cols.witness == ints({1, 1}));
    FeasibilityResult rows = full_support_feasible(m.incidence_I, InvariantSide::Rows);
    REQUIRE(rows.feasible());
    CHECK(*rows.witness == ints({1, 1}));
}

TEST_CASE("infeasible query yields a verified certificate") {
    MatrixBundle m = build_matrices(load_corpus("defic_nprime"));
    FeasibilityResult r = full_support_feasible(m.incidence_I, InvariantSide::Columns);
    REQUIRE_FALSE(r.feasible());
    REQUIRE(r.certificate);
    FeasibilityQuery q{m.incidence_I, {}, {0, 1}};
    CHECK(verify_certificate(q, *r.certificate));
}

TEST_CASE("zero and one sets") {
    FeasibilityQuery q{RationalMatrix::from_rows({ints({1, -1, 0})}), {}, {0}};
    FeasibilityResult r = solve(q);
    REQUIRE(r.feasible());
    CHECK(*r.witness == ints({1, 1, 0}));

    q.zero_set = {1};
    r = solve(q);
    REQUIRE_FALSE(r.feasible());
    CHECK(verify_certificate(q, *r.certificate));

    FeasibilityQuery trivial{RationalMatrix::from_rows({ints({1, -1})}), {}, {}};
    r = solve(trivial);
    REQUIRE(r.feasible());
    CHECK(*r.witness == ints({0, 0}));
}

TEST_CASE("malformed queries are rejected") {
    FeasibilityQuery q{RationalMatrix(2, 3), {3}, {}};
    CHECK_THROWS_AS(solve(q), QueryError);
    q.zero_set = {};
    q.one_set = {5};
    CHECK_THROWS_AS(solve(q), QueryError);
    q.zero_set = {1};
    q.one_set = {1};
    CHECK_THROWS_AS(solve(q), QueryError);
}

TEST_CASE("solve is deterministic") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        FeasibilityQuery q = random_query(rng, 1 + rng() % 4, 1 + rng() % 6, 3);
        FeasibilityResult a = solve(q);
        FeasibilityResult b = solve(q);
        CHECK(a.status == b.status);
        CHECK(a.witness == b.witness);
        CHECK(a.certificate == b.certificate);
    }
}

TEST_CASE("witnesses and certificates verify; brute force agrees on small queries") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        std::size_t rows = 1 + rng() % 3;
        std::size_t cols = 1 + rng() % 4;
        FeasibilityQuery q = random_query(rng, rows, cols, 1);
        FeasibilityResult r = solve(q);
        if (r.feasible()) {
            REQUIRE(r.witness);
            CHECK(verify_witness(q, *r.witness));
            CHECK(to_primitive_integer(*r.witness) == *r.witness);
        } else {
            REQUIRE(r.certificate);
            CHECK(verify_certificate(q, *r.certificate));
        }
        CHECK(brute_force_feasible(q, 16).has_value() == r.feasible());
    }
}

TEST_CASE("verifiers reject bad vectors") {
    FeasibilityQuery q{RationalMatrix::from_rows({ints({1, -1})}), {}, {0}};
    CHECK_FALSE(verify_witness(q, ints({1, 2})));
    CHECK_FALSE(verify_witness(q, ints({0, 0})));
    CHECK_FALSE(verify_witness(q, ints({-1, -1})));
    CHECK(verify_witness(q, ints({3, 3})));
    CHECK_FALSE(verify_certificate(q, ints({1})));
}
