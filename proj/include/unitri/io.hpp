#pragma once

#include "unitri/ftriangle.hpp"
#include "unitri/polynomial.hpp"
#include "unitri/rootcert.hpp"
#include "unitri/scomplex.hpp"
#include "unitri/transform.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

// ---------------------------------------------------------------------------
// Polynomials travel as arrays of exact coefficient strings, low to high.
// ---------------------------------------------------------------------------

inline nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(i)));
    return arr;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(Rational(c.get<long long>()));
        else
            throw std::invalid_argument(
                "polynomial coefficients must be exact strings or integers");
    }
    return Polynomial(std::move(coeffs));
}

inline nlohmann::json rational_vector_to_json(const std::vector<Rational>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : v) arr.push_back(to_string(c));
    return arr;
}

inline std::vector<Rational> rational_vector_from_json(const nlohmann::json& j) {
    Polynomial p = polynomial_from_json(j);
    std::vector<Rational> v;
    v.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i) v.push_back(p.coeff(static_cast<int>(i)));
    return v;
}

// ---------------------------------------------------------------------------
// F-triangles: { "name", "params", "d", "rows" }; row n has n + 1 entries.
// Entries are JSON integers when they fit, decimal strings otherwise.
// ---------------------------------------------------------------------------

inline nlohmann::json ftriangle_to_json(const FTriangle& F) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : F.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& v : row) {
            if (v <= Int(std::numeric_limits<std::int64_t>::max()))
                r.push_back(v.convert_to<std::int64_t>());
            else
                r.push_back(v.str());
        }
        rows.push_back(std::move(r));
    }
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : F.params) params[key] = value;
    return nlohmann::json{
        {"name", F.name}, {"params", params}, {"d", F.d}, {"rows", rows}};
}

inline FTriangle ftriangle_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("rows"))
        throw std::invalid_argument("f-triangle JSON must carry \"d\" and \"rows\"");
    int d = j.at("d").get<int>();
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j.at("rows")) {
        if (!row.is_array()) throw std::invalid_argument("f-triangle rows must be arrays");
        std::vector<Int> r;
        for (const auto& v : row) {
            if (v.is_number_integer())
                r.push_back(Int(v.get<long long>()));
            else if (v.is_string())
                r.push_back(parse_int(v.get<std::string>()));
            else
                throw std::invalid_argument("f-triangle entries must be integers");
        }
        rows.push_back(std::move(r));
    }
    std::map<std::string, long> params;
    if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            params[it.key()] = it.value().get<long>();
    return FTriangle(d, std::move(rows), j.value("name", std::string{}), std::move(params));
}

inline nlohmann::json validation_report_to_json(const ValidationReport& report) {
    nlohmann::json items = nlohmann::json::array();
    for (const Violation& v : report.violations)
        items.push_back({{"check", v.check}, {"where", v.where}, {"message", v.message}});
    return nlohmann::json{{"ok", report.ok()}, {"violations", items}};
}

// ---------------------------------------------------------------------------
// Complexes: { "vertices": [labels], "facets": [[labels]] }; subdivisions add
// "carriers": { vertexLabel: [base vertex labels] }.
// ---------------------------------------------------------------------------

inline nlohmann::json complex_to_json(const SimplicialComplex& K) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const std::string& l : K.labels()) vertices.push_back(l);
    nlohmann::json facets = nlohmann::json::array();
    for (const Face& f : K.facets()) {
        nlohmann::json facet = nlohmann::json::array();
        for (int v : f) facet.push_back(K.labels()[static_cast<size_t>(v)]);
        facets.push_back(std::move(facet));
    }
    return nlohmann::json{{"vertices", vertices}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON must carry \"vertices\" and \"facets\"");
    // "vertices" is either an array of label strings or a plain count, in
    // which case the labels are "0".."count-1" and facets may use integers.
    auto label_of = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer() || v.is_number_unsigned())
            return std::to_string(v.get<long long>());
        throw std::invalid_argument("complex JSON: vertex entries must be strings or integers");
    };
    std::vector<std::string> labels;
    const nlohmann::json& verts = j.at("vertices");
    if (verts.is_number_integer() || verts.is_number_unsigned()) {
        long long count = verts.get<long long>();
        if (count < 0) throw std::invalid_argument("complex JSON: vertex count must be nonnegative");
        for (long long v = 0; v < count; ++v) labels.push_back(std::to_string(v));
    } else if (verts.is_array()) {
        for (const auto& v : verts) labels.push_back(label_of(v));
    } else {
        throw std::invalid_argument("complex JSON: \"vertices\" must be an array or a count");
    }
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<std::string> facet;
        for (const auto& v : f) facet.push_back(label_of(v));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_labelled_facets(std::move(labels), facets);
}

inline nlohmann::json subdivision_to_json(const Subdivision& sd) {
    nlohmann::json j = complex_to_json(sd.total);
    nlohmann::json carriers = nlohmann::json::object();
    for (size_t v = 0; v < sd.vertex_carrier.size(); ++v) {
        nlohmann::json carrier = nlohmann::json::array();
        for (int b : sd.vertex_carrier[v]) carrier.push_back(sd.base.labels()[static_cast<size_t>(b)]);
        carriers[sd.total.labels()[v]] = std::move(carrier);
    }
    j["carriers"] = std::move(carriers);
    return j;
}

// ---------------------------------------------------------------------------
// Certificates and check reports.
// ---------------------------------------------------------------------------

inline nlohmann::json root_certificate_to_json(const RootCertificate& cert) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const RootInterval& iv : cert.intervals)
        intervals.push_back({{"interval", {to_string(iv.lo), to_string(iv.hi)}},
                             {"multiplicity", iv.multiplicity}});
    nlohmann::json j{{"verdict", to_string(cert.verdict)},
                     {"real_roots", cert.real_roots},
                     {"intervals", intervals}};
    if (cert.witness) j["witness"] = polynomial_to_json(*cert.witness);
    return j;
}

inline nlohmann::json check_report_to_json(const CheckReport& report) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckItem& item : report.items)
        items.push_back({{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
    return nlohmann::json{{"ok", report.ok()}, {"checks", items}};
}

inline nlohmann::json coeff_table_to_json(const CoeffTable& table) {
    nlohmann::json polys = nlohmann::json::array();
    for (const Polynomial& p : table.polys) polys.push_back(polynomial_to_json(p));
    nlohmann::json j{{"n", table.n},
                     {"polys", polys},
                     {"audit", validation_report_to_json(table.report)}};
    if (table.has_extra) j["extra"] = polynomial_to_json(table.extra);
    return j;
}

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace unitri
