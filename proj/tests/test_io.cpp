// JSON and file-format stability: every serialized shape the CLI emits.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "unitri/unitri.hpp"

using namespace unitri;

TEST_CASE("polynomial JSON: exact strings low to high, integers accepted") {
    Polynomial p({Rational(1), Rational(-2), Rational(3, 2)});
    nlohmann::json j = polynomial_to_json(p);
    REQUIRE(j.is_array());
    CHECK(j.dump() == R"(["1","-2","3/2"])");
    CHECK(polynomial_from_json(j) == p);

    CHECK(polynomial_from_json(nlohmann::json::parse("[1, 2, 3]")) == Polynomial({1, 2, 3}));
    CHECK(polynomial_from_json(nlohmann::json::parse(R"(["1", 2, "-1/3"])")) ==
          Polynomial({Rational(1), Rational(2), Rational(-1, 3)}));
    CHECK(polynomial_from_json(nlohmann::json::array()) == Polynomial());

    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse("[1.5]")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"(["1/0"])")),
                    std::invalid_argument);
}

TEST_CASE("rational vector JSON keeps trailing zeros") {
    std::vector<Rational> v{1, 0, Rational(5, 3), 0};
    nlohmann::json j = rational_vector_to_json(v);
    CHECK(j.dump() == R"(["1","0","5/3","0"])");
    CHECK(rational_vector_from_json(j) == v);
}

TEST_CASE("f-triangle JSON: round trip with name, params, and big entries") {
    FTriangle F = edgewise_triangle(4, 3);
    nlohmann::json j = ftriangle_to_json(F);
    CHECK(j.at("name") == "edgewise");
    CHECK(j.at("params").at("r") == 4);
    CHECK(j.at("d") == 3);
    REQUIRE(j.at("rows").size() == 4);
    CHECK(j.at("rows")[3] == nlohmann::json::parse("[1, 15, 30, 16]"));

    FTriangle back = ftriangle_from_json(j);
    CHECK(back.rows == F.rows);
    CHECK(back.name == F.name);
    CHECK(back.params == F.params);
    CHECK(back.d == F.d);

    // entries beyond int64 travel as decimal strings
    Int huge = int_pow(Int(2), 70);
    FTriangle big(1, {{1}, {1, huge}});
    nlohmann::json bj = ftriangle_to_json(big);
    CHECK(bj.at("rows")[1][1].is_string());
    CHECK(ftriangle_from_json(bj).rows == big.rows);

    CHECK_THROWS_AS(ftriangle_from_json(nlohmann::json::parse(R"({"d": 1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ftriangle_from_json(nlohmann::json::parse(R"({"d": 0, "rows": [[1.5]]})")),
        std::invalid_argument);
}

TEST_CASE("validation report JSON carries the violation triples") {
    FTriangle corrupt(2, {{1}, {1, 1}, {1, 4, 2}});
    nlohmann::json j = validation_report_to_json(validate(corrupt));
    CHECK(j.at("ok") == false);
    REQUIRE(!j.at("violations").empty());
    const auto& v = j.at("violations")[0];
    CHECK(v.contains("check"));
    CHECK(v.contains("where"));
    CHECK(v.contains("message"));
    CHECK(v.at("check") == "reflection-identity");

    nlohmann::json clean = validation_report_to_json(validate(barycentric_triangle(3), true));
    CHECK(clean.at("ok") == true);
    CHECK(clean.at("violations").empty());
}

TEST_CASE("complex JSON: labelled vertices and facets round trip") {
    SimplicialComplex two = SimplicialComplex::two_triangles();
    nlohmann::json j = complex_to_json(two);
    CHECK(j.at("vertices") == nlohmann::json::parse(R"(["a","b","c","d"])"));
    REQUIRE(j.at("facets").size() == 2);

    SimplicialComplex back = complex_from_json(j);
    CHECK(back.labels() == two.labels());
    CHECK(back.facets() == two.facets());
    CHECK(back.f_vector() == two.f_vector());

    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"vertices": []})")),
                    std::invalid_argument);
}

TEST_CASE("complex JSON: numeric vertex count and integer facets are accepted") {
    nlohmann::json j =
        nlohmann::json::parse(R"({"vertices": 4, "facets": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
    SimplicialComplex K = complex_from_json(j);
    CHECK(K.labels() == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(K.f_vector() == std::vector<Int>{1, 4, 6, 4});  // boundary of the tetrahedron
    CHECK(K.h_vector() == std::vector<Rational>{1, 1, 1, 1});

    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"vertices": -1, "facets": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        complex_from_json(nlohmann::json::parse(R"({"vertices": "4", "facets": []})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        complex_from_json(nlohmann::json::parse(R"({"vertices": 3, "facets": [[0.5, 1]]})")),
        std::invalid_argument);
}

TEST_CASE("subdivision JSON adds carriers keyed by vertex label") {
    Subdivision S = barycentric_subdivision(SimplicialComplex::simplex(2));
    nlohmann::json j = subdivision_to_json(S);
    REQUIRE(j.contains("carriers"));
    CHECK(j.at("carriers").size() == S.total.labels().size());
    size_t edge_carriers = 0;
    for (const auto& [label, carrier] : j.at("carriers").items())
        if (carrier.size() == 2) ++edge_carriers;
    CHECK(edge_carriers == 1);  // exactly the midpoint sits over the whole edge
}

TEST_CASE("root certificate JSON: intervals, multiplicities, witness") {
    Polynomial good = Polynomial({1, 1}) * Polynomial({2, 1});
    nlohmann::json j = root_certificate_to_json(certify_real_rooted(good));
    CHECK(j.at("verdict") == "real-rooted");
    CHECK(j.at("real_roots") == 2);
    REQUIRE(j.at("intervals").size() == 2);
    CHECK(j.at("intervals")[0].at("multiplicity") == 1);
    CHECK(j.at("intervals")[0].at("interval").size() == 2);
    CHECK_FALSE(j.contains("witness"));

    nlohmann::json bad = root_certificate_to_json(certify_real_rooted(Polynomial({1, 0, 1})));
    CHECK(bad.at("verdict") == "not-real-rooted");
    REQUIRE(bad.contains("witness"));
    CHECK(bad.at("witness") == nlohmann::json::parse(R"(["1","0","1"])"));
}

TEST_CASE("check report JSON mirrors the item list") {
    CheckReport rep = check_assumptions(barycentric_triangle(3), 3);
    nlohmann::json j = check_report_to_json(rep);
    CHECK(j.at("ok") == rep.ok());
    REQUIRE(j.at("checks").size() == rep.items.size());
    CHECK(j.at("checks")[0].contains("name"));
    CHECK(j.at("checks")[0].contains("ok"));
    CHECK(j.at("checks")[0].contains("detail"));
}

TEST_CASE("coefficient table JSON: polys always, extra only when available") {
    nlohmann::json with_extra = coeff_table_to_json(coeff_table(edgewise_triangle(2, 3), 2));
    CHECK(with_extra.at("n") == 2);
    REQUIRE(with_extra.at("polys").size() == 3);
    CHECK(with_extra.at("audit").at("ok") == true);
    REQUIRE(with_extra.contains("extra"));
    CHECK(with_extra.at("extra") == nlohmann::json::parse(R"(["0","-1","-1"])"));

    nlohmann::json top = coeff_table_to_json(coeff_table(edgewise_triangle(2, 3), 3));
    CHECK_FALSE(top.contains("extra"));
}

TEST_CASE("file helpers: round trip and missing-file error") {
    const std::string path = "unitri_io_test_tmp.json";
    write_text_file(path, R"({"rows": [[1]], "d": 0})");
    nlohmann::json j = read_json_file(path);
    CHECK(ftriangle_from_json(j).rows == std::vector<std::vector<Int>>{{1}});
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_json_file("definitely/not/a/file.json"), std::runtime_error);
}
