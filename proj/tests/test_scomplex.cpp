// Brute-force simplicial complexes and subdivisions with carrier tracking:
// the independent oracle for every triangle in the catalog.
#include <catch2/catch_amalgamated.hpp>

#include "unitri/unitri.hpp"

using namespace unitri;

TEST_CASE("complex construction: input hygiene") {
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_labelled_facets({"a", "a"}, {{"a"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_labelled_facets({"a"}, {{"b"}}),
                    std::invalid_argument);

    // duplicates collapse, dominated facets are dropped, input order is irrelevant
    SimplicialComplex K({"a", "b", "c"}, {{1, 0}, {0, 1}, {2, 1, 0}, {2}});
    REQUIRE(K.facets().size() == 1);
    CHECK(K.facets()[0] == Face{0, 1, 2});
}

TEST_CASE("complex basics: worked f- and h-data") {
    SimplicialComplex s3 = SimplicialComplex::simplex(3);
    CHECK(s3.dimension() == 2);
    CHECK(s3.f_vector() == std::vector<Int>{1, 3, 3, 1});
    CHECK(s3.h_polynomial() == Polynomial({1}));
    CHECK(s3.h_vector() == std::vector<Rational>{1, 0, 0, 0});

    SimplicialComplex b3 = SimplicialComplex::simplex_boundary(3);
    CHECK(b3.dimension() == 1);
    CHECK(b3.f_vector() == std::vector<Int>{1, 3, 3});
    CHECK(b3.h_polynomial() == Polynomial({1, 1, 1}));

    SimplicialComplex two = SimplicialComplex::two_triangles();
    CHECK(two.f_vector() == std::vector<Int>{1, 4, 5, 2});
    CHECK(two.h_vector() == std::vector<Rational>{1, 1, 0, 0});

    CHECK(s3.contains_face({0, 2}));
    CHECK_FALSE(b3.contains_face({0, 1, 2}));
}

TEST_CASE("complex basics: face enumeration cap") {
    CHECK_THROWS_AS(SimplicialComplex::simplex(4).all_faces(10), std::runtime_error);
    CHECK(SimplicialComplex::simplex(4).all_faces(16).size() == 16);
}

TEST_CASE("trivial subdivision: validates and matches the trivial triangle") {
    Subdivision S = trivial_subdivision(SimplicialComplex::simplex(4));
    CHECK(S.validate().ok());
    CHECK(uniformity_check(S, trivial_triangle(4)).ok());
    CHECK(edgewise_subdivision(SimplicialComplex::simplex(4), 1).total.f_vector() ==
          SimplicialComplex::simplex(4).f_vector());
}

TEST_CASE("barycentric subdivision: worked counts and uniformity") {
    Subdivision edge = barycentric_subdivision(SimplicialComplex::simplex(2));
    CHECK(edge.total.f_vector() == std::vector<Int>{1, 3, 2});
    CHECK(edge.validate().ok());

    Subdivision S = barycentric_subdivision(SimplicialComplex::simplex(3));
    CHECK(S.total.f_vector() == std::vector<Int>{1, 7, 12, 6});
    CHECK(S.total.h_polynomial() == Polynomial({1, 4, 1}));
    CHECK(S.validate().ok());
    CHECK(uniformity_check(S, barycentric_triangle(3)).ok());
}

TEST_CASE("edgewise subdivision: worked counts and uniformity") {
    Subdivision S = edgewise_subdivision(SimplicialComplex::simplex(3), 4);
    CHECK(S.total.f_vector() == std::vector<Int>{1, 15, 30, 16});
    CHECK(S.total.facets().size() == 16);
    CHECK(S.validate().ok());
    CHECK(uniformity_check(S, edgewise_triangle(4, 3)).ok());

    // wrong triangle: same family, wrong parameter
    CHECK_FALSE(uniformity_check(S, edgewise_triangle(3, 3)).ok());
    // triangle window too small for the base
    CHECK_THROWS_AS(uniformity_check(S, edgewise_triangle(4, 2)), std::invalid_argument);
}

TEST_CASE("interior face counts and the local h-polynomial") {
    Subdivision esd = edgewise_subdivision(SimplicialComplex::simplex(3), 4);
    CHECK(interior_face_counts(esd) == std::vector<Int>{0, 3, 18, 16});
    CHECK(local_h(esd) == Polynomial({0, 3, 3}));

    Subdivision sd_edge = barycentric_subdivision(SimplicialComplex::simplex(2));
    CHECK(interior_face_counts(sd_edge) == std::vector<Int>{0, 1, 2});
    CHECK(local_h(sd_edge) == Polynomial({0, 1}));

    Subdivision sd3 = barycentric_subdivision(SimplicialComplex::simplex(3));
    Polynomial l3 = local_h(sd3);
    CHECK(l3 == Polynomial({0, 1, 1}));
    CHECK(is_symmetric(l3, 3));
    CHECK(l3.has_nonnegative_coeffs());

    CHECK_THROWS_AS(local_h(trivial_subdivision(SimplicialComplex::two_triangles())),
                    std::invalid_argument);
}

TEST_CASE("colored subdivision: worked counts and uniformity") {
    Subdivision S2 = colored_barycentric_subdivision(SimplicialComplex::simplex(2), 2);
    CHECK(S2.total.f_vector() == std::vector<Int>{1, 5, 4});

    Subdivision S3 = colored_barycentric_subdivision(SimplicialComplex::simplex(3), 2);
    CHECK(S3.validate().ok());
    CHECK(uniformity_check(S3, colored_barycentric_triangle(2, 3)).ok());
    CHECK(uniformity_check(S3, interval_triangle(3)).ok());
}

TEST_CASE("sdrs subdivision: worked counts and uniformity") {
    Subdivision S = sdrs_subdivision(SimplicialComplex::simplex(3), 3, 1);
    std::vector<Int> fv = S.total.f_vector();
    CHECK(fv == std::vector<Int>{1, 10, 18, 9});
    CHECK(S.validate().ok());
    CHECK(uniformity_check(S, sdrs_triangle(3, 1, 3)).ok());

    Subdivision B = sdrs_subdivision(SimplicialComplex::simplex(3), 2, 1);
    CHECK(B.total.f_vector() ==
          barycentric_subdivision(SimplicialComplex::simplex(3)).total.f_vector());
}

TEST_CASE("composition of subdivisions matches composition of triangles") {
    SimplicialComplex base = SimplicialComplex::simplex(3);
    Subdivision sd = barycentric_subdivision(base);
    Subdivision esd = edgewise_subdivision(sd.total, 2);
    Subdivision comp = compose_subdivisions(sd, esd);
    CHECK(comp.validate().ok());
    CHECK(uniformity_check(comp, colored_barycentric_triangle(2, 3)).ok());

    Subdivision wrong_middle = edgewise_subdivision(SimplicialComplex::simplex(4), 2);
    CHECK_THROWS_AS(compose_subdivisions(sd, wrong_middle), std::invalid_argument);
}

TEST_CASE("subdivision validation catches corrupted carriers") {
    Subdivision S = edgewise_subdivision(SimplicialComplex::simplex(3), 2);
    REQUIRE(S.validate().ok());
    bool corrupted = false;
    for (size_t v = 0; v < S.vertex_carrier.size() && !corrupted; ++v)
        if (S.vertex_carrier[v].size() == 2) {
            S.vertex_carrier[v] = {0};
            corrupted = true;
        }
    REQUIRE(corrupted);
    ValidationReport report = S.validate();
    CHECK_FALSE(report.ok());
}

TEST_CASE("subdivision constructors respect the face cap") {
    CHECK_THROWS_AS(edgewise_subdivision(SimplicialComplex::simplex(4), 4, 10),
                    std::runtime_error);
}

TEST_CASE("face counts of a subdivided complex decompose over base faces") {
    for (const SimplicialComplex& K :
         {SimplicialComplex::simplex_boundary(4), SimplicialComplex::two_triangles()}) {
        Subdivision S = edgewise_subdivision(K, 2);
        DerivedTriangles D = derive(edgewise_triangle(2, 3));
        std::vector<Int> base_counts = K.f_vector();
        Polynomial expected;
        for (size_t m = 0; m < base_counts.size(); ++m)
            expected += Rational(base_counts[m]) * D.interior_f[m];
        CHECK(S.total.f_polynomial() == expected);
    }
}

TEST_CASE("boundary facets of a subdivided simplex base") {
    Subdivision S = edgewise_subdivision(SimplicialComplex::simplex(3), 4);
    CHECK(boundary_facets(S) == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(boundary_facets(trivial_subdivision(SimplicialComplex::two_triangles())),
                    std::invalid_argument);
}

TEST_CASE("relative complexes: deleting initial boundary facets realizes the table rows") {
    Subdivision S = edgewise_subdivision(SimplicialComplex::simplex(3), 4);
    auto row = coeff_poly_row(derive(edgewise_triangle(4, 3)), 3);

    const std::vector<Polynomial> expected_f = {
        Polynomial({1, 15, 30, 16}),
        Polynomial({0, 10, 26, 16}),
        Polynomial({0, 6, 22, 16}),
        Polynomial({0, 3, 18, 16}),
    };
    for (int k = 0; k <= 3; ++k) {
        RelativeComplex rel = relative_without_first_facets(S, k);
        CAPTURE(k);
        CHECK(rel.f == expected_f[static_cast<size_t>(k)]);
        CHECK(rel.h == row[static_cast<size_t>(k)]);
    }
    CHECK_THROWS_AS(relative_without_first_facets(S, 4), std::invalid_argument);
    CHECK_THROWS_AS(relative_without_first_facets(S, -1), std::invalid_argument);
    CHECK_THROWS_AS(relative_without_facets(S, {{0}}), std::invalid_argument);

    // the h-polynomial depends only on how many facets are deleted
    std::vector<Face> bf = boundary_facets(S);
    CHECK(relative_without_facets(S, {bf[0]}).h == relative_without_facets(S, {bf[2]}).h);
    CHECK(relative_without_facets(S, {bf[0], bf[1]}).h ==
          relative_without_facets(S, {bf[1], bf[2]}).h);
}

TEST_CASE("relative complexes: reversal duality between complementary deletions") {
    Subdivision S = edgewise_subdivision(SimplicialComplex::simplex(3), 4);
    std::vector<Face> bf = boundary_facets(S);
    CHECK(relative_symmetry_check(S, {}).ok);
    CHECK(relative_symmetry_check(S, {bf[1]}).ok);
    CHECK(relative_symmetry_check(S, bf).ok);

    Subdivision T = barycentric_subdivision(SimplicialComplex::simplex(4));
    CHECK(relative_symmetry_check(T, {boundary_facets(T)[0]}).ok);
}
