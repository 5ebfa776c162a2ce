// unitri: exact face-enumeration invariants of uniform triangulations.
//
// Subcommands:
//   triangle  derive and validate an f-triangle (catalog or JSON file)
//   coeffs    coefficient table p(n, k, j) with structural audits
//   apply     subdivided h-polynomial of an h-vector or of a complex
//   certify   hypothesis/conclusion reports with root certificates
//   oracle    brute-force cross-checks on an explicit subdivision of a simplex
//
// Exit codes: 0 success, 1 mathematical discrepancy, 2 usage/config error.
#include "unitri/unitri.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace unitri;
using nlohmann::json;

namespace {

struct Options {
    std::string catalog;
    std::string triangle_json;
    int r = 2;
    int s = 1;
    int d = -1;
    int n = -1;
    int samples = 100;
    std::uint64_t seed = 0;
    bool strict = false;
    std::string out;
    std::string format = "json";
    std::size_t max_faces = kDefaultMaxFaces;
    std::uint64_t max_perms = kDefaultMaxPerms;
    std::string hvec;
    std::string complex_json;
};

FTriangle load_triangle(const Options& o) {
    const bool have_catalog = !o.catalog.empty();
    const bool have_json = !o.triangle_json.empty();
    if (have_catalog == have_json)
        throw std::invalid_argument(
            "exactly one triangle source is required: --catalog or --json");
    if (have_json) return ftriangle_from_json(read_json_file(o.triangle_json));
    if (o.d < 0) throw std::invalid_argument("--d is required with --catalog");
    if (o.catalog == "trivial") return trivial_triangle(o.d);
    if (o.catalog == "barycentric") return barycentric_triangle(o.d);
    if (o.catalog == "edgewise") return edgewise_triangle(o.r, o.d);
    if (o.catalog == "colored") return colored_barycentric_triangle(o.r, o.d);
    if (o.catalog == "interval") return interval_triangle(o.d);
    if (o.catalog == "sdrs") return sdrs_triangle(o.r, o.s, o.d);
    throw std::invalid_argument(
        "unknown catalog '" + o.catalog +
        "' (expected trivial, barycentric, edgewise, colored, interval, or sdrs)");
}

Subdivision subdivide_complex(const Options& o, const SimplicialComplex& K) {
    if (o.catalog == "trivial") return trivial_subdivision(K);
    if (o.catalog == "barycentric") return barycentric_subdivision(K, o.max_faces);
    if (o.catalog == "edgewise") return edgewise_subdivision(K, o.r, o.max_faces);
    if (o.catalog == "colored") return colored_barycentric_subdivision(K, o.r, o.max_faces);
    if (o.catalog == "interval") return colored_barycentric_subdivision(K, 2, o.max_faces);
    if (o.catalog == "sdrs") return sdrs_subdivision(K, o.r, o.s, o.max_faces);
    throw std::invalid_argument("unknown catalog '" + o.catalog + "'");
}

void require_level(const Options& o, int d) {
    if (o.n < 0) throw std::invalid_argument("--n is required");
    if (o.n > d)
        throw std::invalid_argument("--n " + std::to_string(o.n) +
                                    " exceeds the triangle size " + std::to_string(d));
}

void require_json_format(const Options& o, const char* command) {
    if (o.format != "json")
        throw std::invalid_argument(std::string(command) + " output is JSON only");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    write_text_file(o.out, text);
}

std::vector<Rational> parse_hvec(const std::string& csv) {
    std::vector<Rational> values;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(parse_rational(item));
    if (values.empty())
        throw std::invalid_argument("--hvec must list at least one coefficient");
    return values;
}

json polynomial_rows_to_json(const std::vector<Polynomial>& rows) {
    json arr = json::array();
    for (const Polynomial& p : rows) arr.push_back(polynomial_to_json(p));
    return arr;
}

int run_triangle(const Options& o) {
    require_json_format(o, "triangle");
    FTriangle F = load_triangle(o);
    ValidationReport report = validate(F, o.strict);
    DerivedTriangles D = derive(F);
    json out{{"triangle", ftriangle_to_json(F)},
             {"derived",
              {{"f", polynomial_rows_to_json(D.f)},
               {"h", polynomial_rows_to_json(D.h)},
               {"interior_f", polynomial_rows_to_json(D.interior_f)},
               {"interior_h", polynomial_rows_to_json(D.interior_h)},
               {"local_h", polynomial_rows_to_json(D.local_h)}}},
             {"validation", validation_report_to_json(report)}};
    emit(o, out.dump(2) + "\n");
    if (!report.ok()) {
        std::cerr << "validation failed:\n" << report.str();
        return 1;
    }
    return 0;
}

int run_coeffs(const Options& o) {
    FTriangle F = load_triangle(o);
    require_level(o, F.d);
    CoeffTable table = coeff_table(derive(F), o.n, /*cross_check=*/true);
    if (o.format == "csv")
        emit(o, coeff_table_csv(table));
    else
        emit(o, coeff_table_to_json(table).dump(2) + "\n");
    if (!table.report.ok()) {
        std::cerr << "audit failed:\n" << table.report.str();
        return 1;
    }
    return 0;
}

int run_apply(const Options& o) {
    require_json_format(o, "apply");
    const bool have_hvec = !o.hvec.empty();
    const bool have_complex = !o.complex_json.empty();
    if (have_hvec == have_complex)
        throw std::invalid_argument("exactly one input is required: --hvec or --complex");
    FTriangle F = load_triangle(o);
    require_level(o, F.d);
    DerivedTriangles D = derive(F);

    json out{{"n", o.n}};
    int exit_code = 0;
    if (have_hvec) {
        std::vector<Rational> h = parse_hvec(o.hvec);
        Polynomial image = apply_h(D, h, o.n);
        out["h_input"] = rational_vector_to_json(h);
        out["h_subdivided"] = polynomial_to_json(image);
    } else {
        SimplicialComplex K = complex_from_json(read_json_file(o.complex_json));
        if (K.dimension() + 1 != o.n)
            throw std::invalid_argument("--n must equal dim + 1 = " +
                                        std::to_string(K.dimension() + 1));
        std::vector<Rational> h = K.h_vector();
        Polynomial image = apply_h(D, h, o.n);
        out["h_input"] = rational_vector_to_json(h);
        out["h_subdivided"] = polynomial_to_json(image);
        json oracle{{"ran", false}};
        if (!o.catalog.empty()) {
            Subdivision S = subdivide_complex(o, K);
            Polynomial brute = S.total.h_polynomial();
            bool matched = brute == image;
            oracle = json{{"ran", true},
                          {"matched", matched},
                          {"h_brute", polynomial_to_json(brute)}};
            if (!matched) exit_code = 1;
        }
        out["oracle"] = oracle;
    }
    emit(o, out.dump(2) + "\n");
    if (exit_code != 0)
        std::cerr << "subdivided h-polynomial does not match the brute-force value\n";
    return exit_code;
}

int run_certify(const Options& o) {
    require_json_format(o, "certify");
    FTriangle F = load_triangle(o);
    require_level(o, F.d);
    if (o.n < 1) throw std::invalid_argument("--n must be at least 1 for certify");
    DerivedTriangles D = derive(F);
    CheckReport assumptions = check_assumptions(D, o.n);
    CheckReport conclusions = check_conclusions(F, o.n, o.samples, o.seed);
    json out{{"n", o.n},
             {"samples", o.samples},
             {"seed", o.seed},
             {"assumptions", check_report_to_json(assumptions)},
             {"conclusions", check_report_to_json(conclusions)},
             {"h_row_certificate",
              root_certificate_to_json(certify_real_rooted(D.h[static_cast<size_t>(o.n)]))},
             {"boundary_h_certificate",
              root_certificate_to_json(certify_real_rooted(boundary_h_direct(D, o.n)))}};
    emit(o, out.dump(2) + "\n");
    if (!assumptions.ok() || !conclusions.ok()) {
        std::cerr << "certification failed:\n" << assumptions.str() << conclusions.str();
        return 1;
    }
    return 0;
}

int run_oracle(const Options& o) {
    require_json_format(o, "oracle");
    if (o.catalog.empty())
        throw std::invalid_argument("oracle requires --catalog (an explicit construction)");
    FTriangle F = load_triangle(o);
    require_level(o, F.d);
    DerivedTriangles D = derive(F);
    SimplicialComplex K = SimplicialComplex::simplex(o.n);
    Subdivision S = subdivide_complex(o, K);

    CheckReport report;
    report.items.push_back(
        {"uniform face counts against the triangle", uniformity_check(S, F).ok(), ""});
    Polynomial brute_h = S.total.h_polynomial();
    const Polynomial& row_h = D.h[static_cast<size_t>(o.n)];
    report.items.push_back({"subdivision h equals the triangle h row", brute_h == row_h,
                            brute_h.str() + " vs " + row_h.str()});
    {
        std::vector<Rational> counts;
        for (const Int& c : interior_face_counts(S)) counts.emplace_back(c);
        Polynomial interior{std::move(counts)};
        report.items.push_back({"interior face counts match the interior row",
                                interior == D.interior_f[static_cast<size_t>(o.n)], ""});
    }
    report.items.push_back({"local h from the complex matches the derived row",
                            local_h(S) == D.local_h[static_cast<size_t>(o.n)], ""});
    auto row = coeff_poly_row(D, o.n);
    bool rows_ok = true;
    for (int k = 0; k <= o.n; ++k)
        rows_ok &= relative_without_first_facets(S, k).h == row[static_cast<size_t>(k)];
    report.items.push_back(
        {"relative h after deleting k facets equals the row entries", rows_ok, ""});
    std::vector<Face> facets = boundary_facets(S);
    bool duality_ok = true;
    for (int k = 0; k <= o.n; ++k) {
        std::vector<Face> chosen(facets.begin(), facets.begin() + k);
        duality_ok &= relative_symmetry_check(S, chosen).ok;
    }
    report.items.push_back(
        {"reversal duality of complementary facet deletions", duality_ok, ""});
    if (o.catalog == "colored" || o.catalog == "interval") {
        const int r_eff = o.catalog == "interval" ? 2 : o.r;
        const char* name = "joint descent table equals the coefficient table";
        try {
            auto counted = colored_descent_table(o.n, r_eff, o.max_perms);
            CoeffTable table = coeff_table(D, o.n);
            bool match = table.report.ok();
            for (size_t k = 0; k < counted.size() && match; ++k)
                for (size_t j = 0; j < counted.size() && match; ++j)
                    match = counted[k][j] == table.matrix[k][j];
            report.items.push_back({name, match, ""});
        } catch (const enumeration_cap_error& e) {
            report.items.push_back({name, true, std::string("skipped: ") + e.what()});
        }
    }

    json out{{"catalog", o.catalog}, {"n", o.n}, {"checks", check_report_to_json(report)}};
    emit(o, out.dump(2) + "\n");
    if (!report.ok()) {
        std::cerr << "oracle failed:\n" << report.str();
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact face-enumeration invariants of uniform triangulations"};
    app.require_subcommand(0, 1);

    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--catalog", o.catalog,
                        "catalog triangle: trivial, barycentric, edgewise, colored, "
                        "interval, sdrs");
        cmd->add_option("--json", o.triangle_json, "f-triangle JSON file as the source");
        cmd->add_option("--r", o.r, "refinement parameter r");
        cmd->add_option("--s", o.s, "strip parameter s (sdrs only)");
        cmd->add_option("--d", o.d, "triangle size (levels 0..d)");
        cmd->add_option("--out", o.out, "write output to this path instead of stdout");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--max-faces", o.max_faces, "cap on enumerated faces");
        cmd->add_option("--max-perms", o.max_perms, "cap on enumerated permutations");
        return cmd;
    };

    CLI::App* cmd_triangle =
        add_common(app.add_subcommand("triangle", "derive and validate an f-triangle"));
    cmd_triangle->add_flag("--strict", o.strict, "enable the strict validation suite");

    CLI::App* cmd_coeffs =
        add_common(app.add_subcommand("coeffs", "coefficient table with audits"));
    cmd_coeffs->add_option("--n", o.n, "table level");

    CLI::App* cmd_apply =
        add_common(app.add_subcommand("apply", "subdivided h-polynomial"));
    cmd_apply->add_option("--n", o.n, "window (dimension + 1)");
    cmd_apply->add_option("--hvec", o.hvec, "comma-separated h-vector, low to high");
    cmd_apply->add_option("--complex", o.complex_json, "simplicial complex JSON file");

    CLI::App* cmd_certify = add_common(app.add_subcommand(
        "certify", "hypothesis/conclusion reports with root certificates"));
    cmd_certify->add_option("--n", o.n, "level to certify");
    cmd_certify->add_option("--samples", o.samples, "random h-vectors for the sweep");
    cmd_certify->add_option("--seed", o.seed, "seed for the sample stream");

    CLI::App* cmd_oracle = add_common(
        app.add_subcommand("oracle", "brute-force subdivision cross-checks"));
    cmd_oracle->add_option("--n", o.n, "number of vertices of the base simplex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_triangle->parsed()) return run_triangle(o);
        if (cmd_coeffs->parsed()) return run_coeffs(o);
        if (cmd_apply->parsed()) return run_apply(o);
        if (cmd_certify->parsed()) return run_certify(o);
        if (cmd_oracle->parsed()) return run_oracle(o);
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
