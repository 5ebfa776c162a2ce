#include <catch2/catch_amalgamated.hpp>

#include "unitri/ftriangle.hpp"
#include "unitri/transform.hpp"

using namespace unitri;

namespace {

std::vector<FTriangle> catalog(int d) {
    return {trivial_triangle(d),
            barycentric_triangle(d),
            edgewise_triangle(2, d),
            edgewise_triangle(3, d),
            edgewise_triangle(4, d),
            colored_barycentric_triangle(2, d),
            colored_barycentric_triangle(3, d),
            interval_triangle(d),
            sdrs_triangle(3, 1, d),
            sdrs_triangle(4, 2, d)};
}

FTriangle bump_entry(FTriangle F, int i, int j) {
    F.rows[static_cast<size_t>(j)][static_cast<size_t>(i)] += 1;
    return F;
}

}  // namespace

TEST_CASE("FTriangle shape validation") {
    CHECK_THROWS_AS(FTriangle(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(FTriangle(1, {{1}}), std::invalid_argument);           // missing row
    CHECK_THROWS_AS(FTriangle(1, {{1}, {1, 1, 1}}), std::invalid_argument);  // bad length
    CHECK_THROWS_AS(FTriangle(1, {{1}, {1, -1}}), std::invalid_argument);    // negative
    FTriangle ok(1, {{1}, {1, 1}}, "tiny", {{"r", 2}});
    CHECK(ok.entry(1, 1) == 1);
    CHECK_THROWS_AS(ok.entry(2, 1), std::out_of_range);
    CHECK_THROWS_AS(ok.f_poly(5), std::out_of_range);
    CHECK(ok.describe() == "tiny r=2 (d=1)");
}

TEST_CASE("trivial triangle is the identity triangulation") {
    FTriangle F = trivial_triangle(5);
    CHECK(F.rows[2] == std::vector<Int>{1, 2, 1});
    CHECK(F.rows[5] == std::vector<Int>{1, 5, 10, 10, 5, 1});
    DerivedTriangles D = derive(F);
    for (int n = 0; n <= 5; ++n) {
        CHECK(D.h[static_cast<size_t>(n)] == Polynomial({1}));
        if (n >= 1) CHECK(D.local_h[static_cast<size_t>(n)].is_zero());
    }
    CHECK(D.local_h[0] == Polynomial({1}));
    CHECK(validate(F, true).ok());
}

TEST_CASE("barycentric triangle") {
    FTriangle F = barycentric_triangle(6);
    DerivedTriangles D = derive(F);

    SECTION("interior counts are k! S(n, k)") {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(D.interior_f[static_cast<size_t>(n)].coeff(k) ==
                      Rational(factorial(k) * stirling2(n, k)));
    }

    SECTION("worked rows") {
        CHECK(D.interior_f[2] == Polynomial({0, 1, 2}));
        CHECK(D.f[2] == Polynomial({1, 3, 2}));
        CHECK(D.h[3] == Polynomial({1, 4, 1}));
        CHECK(D.local_h[3] == Polynomial({0, 1, 1}));
    }

    CHECK(validate(F, true).ok());
}

TEST_CASE("edgewise triangle") {
    SECTION("worked rows for r = 4") {
        FTriangle F = edgewise_triangle(4, 3);
        DerivedTriangles D = derive(F);
        CHECK(D.h[3] == Polynomial({1, 12, 3}));
        CHECK(D.f[3] == Polynomial({1, 15, 30, 16}));
        CHECK(D.local_h[3] == Polynomial({0, 3, 3}));
        CHECK(D.interior_f[3] == Polynomial({0, 3, 18, 16}));
    }

    SECTION("r = 1 is the trivial triangle") {
        CHECK(edgewise_triangle(1, 5).rows == trivial_triangle(5).rows);
    }

    SECTION("r = 2 h-rows are the even binomial sections") {
        FTriangle F = edgewise_triangle(2, 8);
        DerivedTriangles D = derive(F);
        for (int n = 0; n <= 8; ++n) {
            Polynomial expected;
            for (int k = 0; 2 * k <= n; ++k)
                expected += Polynomial::monomial(k, Rational(binomial(n, 2 * k)));
            CHECK(D.h[static_cast<size_t>(n)] == expected);
        }
    }

    SECTION("subdivided-edge rows for generic r") {
        for (int r = 2; r <= 6; ++r) {
            DerivedTriangles D = derive(edgewise_triangle(r, 2));
            CHECK(D.local_h[2] == Polynomial({0, r - 1}));
            CHECK(D.interior_h[2] == Polynomial({0, r - 1, 1}));
            CHECK(D.interior_f[2] == Polynomial({0, r - 1, r}));
            CHECK(D.f[2] == Polynomial({1, r + 1, r}));
        }
    }

    CHECK_THROWS_AS(edgewise_triangle(0, 3), std::invalid_argument);
}

TEST_CASE("composition of triangles") {
    const int d = 4;
    FTriangle id = trivial_triangle(d);
    FTriangle sd = barycentric_triangle(d);
    FTriangle e2 = edgewise_triangle(2, d);
    FTriangle e3 = edgewise_triangle(3, d);

    SECTION("trivial is a two-sided identity") {
        for (const FTriangle& G : catalog(d)) {
            CHECK(compose(id, G).rows == G.rows);
            CHECK(compose(G, id).rows == G.rows);
        }
    }

    SECTION("worked row: barycentric then 2-fold edgewise on the edge") {
        CHECK(compose(sd, e2).rows[2] == std::vector<Int>{1, 5, 4});
    }

    SECTION("associativity") {
        CHECK(compose(compose(sd, e2), e3).rows == compose(sd, compose(e2, e3)).rows);
        CHECK(compose(compose(e2, sd), e2).rows == compose(e2, compose(sd, e2)).rows);
    }

    SECTION("edgewise triangles compose multiplicatively") {
        CHECK(compose(e2, e3).rows == edgewise_triangle(6, d).rows);
    }

    CHECK_THROWS_AS(compose(trivial_triangle(2), trivial_triangle(3)), std::invalid_argument);
}

TEST_CASE("colored barycentric and interval triangles") {
    SECTION("r = 1 collapses to barycentric") {
        CHECK(colored_barycentric_triangle(1, 4).rows == barycentric_triangle(4).rows);
    }

    SECTION("worked rows for r = 2") {
        FTriangle F = colored_barycentric_triangle(2, 3);
        CHECK(F.rows[2] == std::vector<Int>{1, 5, 4});
        DerivedTriangles D = derive(F);
        CHECK(D.h[2] == Polynomial({1, 3}));
    }

    SECTION("interval triangle is the r = 2 alias") {
        FTriangle F = interval_triangle(4);
        CHECK(F.rows == colored_barycentric_triangle(2, 4).rows);
        CHECK(F.name == "interval");
    }

    CHECK(colored_barycentric_triangle(3, 3).params.at("r") == 3);
    CHECK_THROWS_AS(colored_barycentric_triangle(0, 3), std::invalid_argument);
}

TEST_CASE("skeleton-coned subdivision triangle") {
    SECTION("(r, s) = (2, 1) is barycentric") {
        CHECK(sdrs_triangle(2, 1, 4).rows == barycentric_triangle(4).rows);
    }

    SECTION("large s falls back to edgewise") {
        CHECK(sdrs_triangle(4, 3, 4).rows == edgewise_triangle(4, 4).rows);
        CHECK(sdrs_triangle(5, 4, 4).rows == edgewise_triangle(5, 4).rows);
    }

    SECTION("worked row for (r, s) = (3, 1)") {
        FTriangle F = sdrs_triangle(3, 1, 3);
        CHECK(F.rows[3] == std::vector<Int>{1, 10, 18, 9});
        DerivedTriangles D = derive(F);
        CHECK(D.h[3] == Polynomial({1, 7, 1}));
    }

    SECTION("parameter preconditions") {
        CHECK_THROWS_AS(sdrs_triangle(3, 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(sdrs_triangle(3, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(sdrs_triangle(2, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(sdrs_triangle(0, 1, 3), std::invalid_argument);
    }
}

TEST_CASE("validation accepts the catalog and flags corruption") {
    SECTION("every catalog triangle is clean, strict included") {
        for (const FTriangle& F : catalog(4)) {
            ValidationReport basic = validate(F, false);
            INFO(F.describe() << "\n" << basic.str());
            CHECK(basic.ok());
            ValidationReport strict = validate(F, true);
            INFO(F.describe() << "\n" << strict.str());
            CHECK(strict.ok());
        }
    }

    SECTION("single-entry corruption is caught") {
        FTriangle F = edgewise_triangle(3, 3);
        for (int j = 1; j <= 3; ++j)
            for (int i = 0; i <= j; ++i) {
                ValidationReport report = validate(bump_entry(F, i, j), false);
                INFO("bumped entry (" << i << ", " << j << ")");
                CHECK(!report.ok());
            }
    }

    SECTION("corruption reports name the reflection identity") {
        ValidationReport report = validate(bump_entry(edgewise_triangle(2, 3), 2, 3), false);
        REQUIRE(!report.ok());
        bool found = false;
        for (const Violation& v : report.violations)
            if (v.check == "reflection-identity") found = true;
        CHECK(found);
    }

    SECTION("strict-only violations") {
        // passes the base identities but is not the triangle of any
        // triangulation: the top face count vanishes
        FTriangle F(2, {{1}, {1, 1}, {1, 1, 0}});
        CHECK(validate(F, false).ok());
        CHECK(!validate(F, true).ok());
    }
}

TEST_CASE("derived-triangle identities across the catalog") {
    for (const FTriangle& F : catalog(4)) {
        DerivedTriangles D = derive(F);
        INFO(F.describe());
        for (int n = 0; n <= F.d; ++n) {
            const Polynomial& h = D.h[static_cast<size_t>(n)];
            // h and f determine each other on the window n
            CHECK(f_from_h(h, n) == D.f[static_cast<size_t>(n)]);
            // interior h is the reversal, interior f its f-transform
            CHECK(D.interior_h[static_cast<size_t>(n)] == reversed(h, n));
            CHECK(D.interior_f[static_cast<size_t>(n)] ==
                  f_from_h(D.interior_h[static_cast<size_t>(n)], n));
            // interior counts agree with the inclusion-exclusion route
            CHECK(D.interior_f[static_cast<size_t>(n)] ==
                  interior_f_by_inclusion_exclusion(F, n));
            // reflection identity ties the rows together
            CHECK(reflect(D.interior_f[static_cast<size_t>(n)]) ==
                  (n % 2 == 0 ? Rational(1) : Rational(-1)) * D.f[static_cast<size_t>(n)]);
            // binomial inversion: h row from the local rows
            Polynomial from_local;
            for (int k = 0; k <= n; ++k)
                from_local += Rational(binomial(n, k)) * D.local_h[static_cast<size_t>(k)];
            CHECK(from_local == h);
            // top h-coefficient window: coefficient of x^(n-1) counts interior vertices
            if (n >= 1)
                CHECK(h.coeff(n - 1) == D.interior_f[static_cast<size_t>(n)].coeff(1));
            // carrier decomposition of the face counts
            Polynomial from_interior;
            for (int m = 0; m <= n; ++m)
                from_interior +=
                    Rational(binomial(n, m)) * D.interior_f[static_cast<size_t>(m)];
            CHECK(from_interior == D.f[static_cast<size_t>(n)]);
        }
    }
}
