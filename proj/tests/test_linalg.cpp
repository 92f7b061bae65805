#include "doctest.h"

#include "support.hpp"

#include <numeric>

using namespace crnscope;
using namespace crnscope::testing;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
    RationalMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(-spread, spread);
    std::uniform_int_distribution<int> den(1, 3);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Rational q(entry(rng), den(rng));
            q.canonicalize();
            m(r, c) = q;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(rank(build_matrices(load_corpus("shinar_toy")).incidence_I) == 1);
    CHECK(rank(RationalMatrix(3, 4)) == 0);
    CHECK(rank(RationalMatrix(0, 0)) == 0);
    CHECK(rank(build_matrices(load_corpus("from_lit")).incidence_I) == 4);
}

TEST_CASE("kernel_basis canonical vectors") {
    auto toy = kernel_basis(build_matrices(load_corpus("shinar_toy")).incidence_I);
    CHECK(toy == std::vector<RationalVector>{ints({1, 1})});

    CHECK(kernel_basis(RationalMatrix::identity({"x", "y", "z"})).empty());

    auto defic = kernel_basis(build_matrices(load_corpus("defic_nprime")).incidence_I);
    CHECK(defic == std::vector<RationalVector>{ints({1, -1})});

    RationalMatrix half = RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}});
    CHECK(kernel_basis(half) == std::vector<RationalVector>{ints({2, -3})});
}

TEST_CASE("multiply") {
    for (const char* name : {"shinar_toy", "from_lit"}) {
        MatrixBundle m = build_matrices(load_corpus(name));
        CHECK(multiply(m.complex_Y, m.graph_R) == m.incidence_I);
    }
    RationalMatrix a = RationalMatrix::from_rows({ints({1, 2}), ints({3, 4})});
    RationalMatrix id(a.col_labels(), a.col_labels());
    id(0, 0) = id(1, 1) = 1;
    CHECK(multiply(a, id) == a);
    CHECK_THROWS_AS(multiply(a, RationalMatrix(3, 1)), LinalgError);
}

TEST_CASE("in_span") {
    Crn lit = load_corpus("from_lit");
    MatrixBundle m = build_matrices(lit);
    CHECK(in_span(ints({0, 0, 0, 0, 0, 0, 0, 0}), {}));
    CHECK(in_span(to_rational(parikh(lit, seq(lit, "gfce"))), kernel_basis(m.incidence_I)));
    CHECK_FALSE(in_span(to_rational(parikh(lit, seq(lit, "gfce"))), kernel_basis(m.graph_R)));

    Crn toy = load_corpus("shinar_toy");
    auto ker_r = kernel_basis(build_matrices(toy).graph_R);
    CHECK(ker_r.empty());
    CHECK_FALSE(in_span(to_rational(parikh(toy, seq(toy, "ab"))), ker_r));
}

TEST_CASE("labels are unique") {
    CHECK_THROWS_AS(RationalMatrix({"a", "a"}, {"x"}), LinalgError);
    RationalMatrix m({"a", "b"}, {"x"});
    CHECK(m.row_index("b") == 1);
    CHECK_FALSE(m.col_index("y").has_value());
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("007") == Rational(7));
    CHECK(parse_rational("010/08") == Rational(5, 4));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK_FALSE(parse_rational("").has_value());
    CHECK(to_string(*parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5");
}

TEST_CASE("rank-nullity, kernel membership and pivot-order independence") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t rows = 1 + rng() % 6;
        std::size_t cols = 1 + rng() % 7;
        RationalMatrix m = random_matrix(rng, rows, cols, trial % 2 ? 2 : 1);
        std::size_t r = rank(m);
        auto basis = kernel_basis(m);
        CHECK(r == naive_rank(m));
        CHECK(r + basis.size() == cols);
        CHECK(rank(m.transposed()) == r);
        for (const auto& v : basis) {
            CHECK(is_zero_vector(m.apply(v)));
            CHECK(to_primitive_integer(v) == v);
            auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
            REQUIRE(first != v.end());
            CHECK(sgn(*first) > 0);
        }
        std::vector<RationalVector> permuted;
        for (std::size_t i = rows; i-- > 0;) {
            permuted.push_back(m.row(i));
        }
        CHECK(rank(RationalMatrix::from_rows(permuted)) == r);
        CHECK(same_span(kernel_basis(RationalMatrix::from_rows(permuted)), basis));
    }
}
