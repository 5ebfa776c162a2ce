// Colored-permutation statistics: the enumerative side of the coefficient
// tables, plus the Eulerian ladder they generalize.
#include <catch2/catch_amalgamated.hpp>

#include "unitri/unitri.hpp"

using namespace unitri;

TEST_CASE("eulerian polynomials: first rows and the recurrence tail") {
    CHECK(eulerian(0) == Polynomial({1}));
    CHECK(eulerian(1) == Polynomial({1}));
    CHECK(eulerian(2) == Polynomial({1, 1}));
    CHECK(eulerian(3) == Polynomial({1, 4, 1}));
    CHECK(eulerian(4) == Polynomial({1, 11, 11, 1}));

    // row 10 exercises the recurrence branch beyond the enumerated cache
    CHECK(eulerian(10) ==
          Polynomial({1, 1013, 47840, 455192, 1310354, 1310354, 455192, 47840, 1013, 1}));

    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(eulerian(n).coeff_sum() == Rational(factorial(n)));
        CHECK(reversed(eulerian(n), n - 1) == eulerian(n));
    }
    CHECK_THROWS_AS(eulerian(-1), std::invalid_argument);
}

TEST_CASE("descent counting for colored permutations") {
    // uncolored: the classical statistic, the final position never descending
    CHECK(descent_count({{1, 2, 3}, {0, 0, 0}}) == 0);
    CHECK(descent_count({{3, 2, 1}, {0, 0, 0}}) == 2);
    CHECK(descent_count({{2, 1, 3}, {0, 0, 0}}) == 1);

    // the final position is a descent exactly when its color is nonzero
    CHECK(descent_count({{1, 2}, {0, 1}}) == 1);
    CHECK(descent_count({{1, 2}, {1, 0}}) == 1);  // color drop at position 1
    CHECK(descent_count({{1, 2}, {0, 0}}) == 0);
    CHECK(descent_count({{2, 1}, {1, 1}}) == 2);  // letter drop inside, color drop at end

    CHECK_THROWS_AS(descent_count({{1, 2}, {0}}), std::invalid_argument);
}

TEST_CASE("colored descent polynomial: worked values and scalings") {
    CHECK(colored_descent_poly(3, 1) == eulerian(3));
    CHECK(colored_descent_poly(5, 1) == eulerian(5));
    CHECK(colored_descent_poly(2, 2) == Polynomial({1, 3}));

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(n, r);
            CHECK(colored_descent_poly(n, r).coeff_sum() ==
                  Rational(factorial(n) * int_pow(Int(r), n - 1)));
        }
    CHECK_THROWS_AS(colored_descent_poly(0, 2), std::invalid_argument);
}

TEST_CASE("colored descent polynomial matches the h-rows of the composed triangle") {
    for (int r = 1; r <= 3; ++r) {
        DerivedTriangles D = derive(colored_barycentric_triangle(r, 4));
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(r, n);
            CHECK(colored_descent_poly(n, r) == D.h[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("word ascent polynomial: worked values and scalings") {
    CHECK(word_ascent_poly(2, 4) == Polynomial({1, 12, 3}));
    for (int n = 1; n <= 4; ++n) {
        CHECK(word_ascent_poly(n, 1) == Polynomial({1}));
        for (int r = 2; r <= 4; ++r) {
            CAPTURE(n, r);
            CHECK(word_ascent_poly(n, r).coeff_sum() == Rational(int_pow(Int(r), n)));
        }
    }
}

TEST_CASE("word ascent polynomial matches the h-rows of the edgewise triangle") {
    for (int r = 1; r <= 4; ++r) {
        DerivedTriangles D = derive(edgewise_triangle(r, 5));
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(r, n);
            CHECK(word_ascent_poly(n, r) == D.h[static_cast<size_t>(n) + 1]);
        }
    }
}

TEST_CASE("joint descent table: row sums count the fixed-last-letter classes") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n) {
            auto table = colored_descent_table(n, r);
            REQUIRE(table.size() == static_cast<size_t>(n) + 1);
            Int expected = factorial(n) * int_pow(Int(r), n - 1);
            for (size_t k = 0; k < table.size(); ++k) {
                Int row_sum = 0;
                for (const Int& v : table[k]) row_sum += v;
                CAPTURE(r, n, k);
                CHECK(row_sum == expected);
            }
        }
}

TEST_CASE("joint descent table equals the coefficient matrix of the composed triangle") {
    struct Case {
        int r, n;
    };
    for (Case c : {Case{1, 3}, Case{1, 4}, Case{2, 3}, Case{2, 4}, Case{3, 3}}) {
        CoeffTable t = coeff_table(colored_barycentric_triangle(c.r, c.n), c.n, true);
        REQUIRE(t.report.ok());
        auto q = colored_descent_table(c.n, c.r);
        CAPTURE(c.r, c.n);
        REQUIRE(q.size() == t.matrix.size());
        for (size_t k = 0; k < q.size(); ++k)
            for (size_t j = 0; j < q.size(); ++j) CHECK(q[k][j] == t.matrix[k][j]);
    }
}

TEST_CASE("joint descent table: last-letter swap recurrence") {
    for (int r = 1; r <= 2; ++r)
        for (int n = 2; n <= 4; ++n) {
            auto q = colored_descent_table(n, r);
            auto prev = colored_descent_table(n - 1, r);
            auto prev_at = [&](int k, int j) {
                if (j < 0 || j >= static_cast<int>(prev.size())) return Int(0);
                return prev[static_cast<size_t>(k)][static_cast<size_t>(j)];
            };
            for (int k = 1; k <= n; ++k)
                for (int j = 0; j <= n; ++j) {
                    CAPTURE(r, n, k, j);
                    CHECK(q[static_cast<size_t>(k)][static_cast<size_t>(j)] ==
                          q[static_cast<size_t>(k) - 1][static_cast<size_t>(j)] +
                              prev_at(k - 1, j - 1) - prev_at(k - 1, j));
                }
        }
}

TEST_CASE("enumeration caps surface as a dedicated error type") {
    CHECK_THROWS_AS(colored_descent_poly(5, 2, 100), enumeration_cap_error);
    CHECK_THROWS_AS(word_ascent_poly(30, 2), enumeration_cap_error);
    CHECK_THROWS_AS(colored_descent_table(10, 2, 1000), enumeration_cap_error);
    CHECK_THROWS_AS(colored_descent_poly(20, 3), enumeration_cap_error);

    // the cap error is a runtime_error but distinguishable from other failures
    try {
        colored_descent_poly(5, 2, 100);
        FAIL("expected enumeration_cap_error");
    } catch (const enumeration_cap_error& e) {
        CHECK(std::string(e.what()).find("exceeds cap") != std::string::npos);
    }
}

TEST_CASE("colored descent counts: single-entry accessor bounds") {
    CHECK(colored_descent_count(2, 0, 0, 2) == Int(1));
    CHECK_THROWS_AS(colored_descent_count(2, 3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(colored_descent_count(2, 0, -1, 2), std::invalid_argument);
}
