#pragma once

#include "unitri/ftriangle.hpp"
#include "unitri/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitri {

/// A face is a sorted vector of vertex ids.
using Face = std::vector<int>;

inline constexpr size_t kDefaultMaxFaces = 1'000'000;

inline bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_union(const Face& a, const Face& b) {
    Face u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

/**
 * Finite abstract simplicial complex over an ordered vertex list.  Stores the
 * maximal faces only; non-maximal input facets are dropped at construction.
 * The empty face is always counted (f_(-1) = 1).
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets)
        : labels_(std::move(labels)) {
        for (Face& f : facets) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw std::invalid_argument("SimplicialComplex: facet with repeated vertex");
            for (int v : f)
                if (v < 0 || v >= static_cast<int>(labels_.size()))
                    throw std::invalid_argument("SimplicialComplex: vertex id out of range");
        }
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        for (size_t i = 0; i < facets.size(); ++i) {
            bool dominated = false;
            for (size_t j = 0; j < facets.size(); ++j)
                if (i != j && facets[i].size() < facets[j].size() &&
                    face_subset(facets[i], facets[j])) {
                    dominated = true;
                    break;
                }
            if (!dominated) facets_.push_back(facets[i]);
        }
    }

    static SimplicialComplex from_labelled_facets(std::vector<std::string> labels,
                                                  const std::vector<std::vector<std::string>>& facets) {
        std::map<std::string, int> index;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (index.count(labels[i]))
                throw std::invalid_argument("SimplicialComplex: duplicate vertex label " + labels[i]);
            index[labels[i]] = static_cast<int>(i);
        }
        std::vector<Face> ids;
        for (const auto& f : facets) {
            Face face;
            for (const auto& l : f) {
                auto it = index.find(l);
                if (it == index.end())
                    throw std::invalid_argument("SimplicialComplex: unknown vertex label " + l);
                face.push_back(it->second);
            }
            ids.push_back(std::move(face));
        }
        return SimplicialComplex(std::move(labels), std::move(ids));
    }

    /// Full simplex on n vertices (the (n-1)-simplex).
    static SimplicialComplex simplex(int n) {
        std::vector<std::string> labels;
        Face all;
        for (int i = 0; i < n; ++i) {
            labels.push_back("v" + std::to_string(i + 1));
            all.push_back(i);
        }
        return SimplicialComplex(std::move(labels), {all});
    }

    /// Boundary of the (n-1)-simplex: all (n-2)-faces of the simplex on n vertices.
    static SimplicialComplex simplex_boundary(int n) {
        if (n < 1) throw std::invalid_argument("simplex_boundary: need at least one vertex");
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
        std::vector<Face> facets;
        for (int skip = 0; skip < n; ++skip) {
            Face f;
            for (int i = 0; i < n; ++i)
                if (i != skip) f.push_back(i);
            facets.push_back(std::move(f));
        }
        return SimplicialComplex(std::move(labels), std::move(facets));
    }

    /// Two triangles glued along an edge: a 2-ball with h-vector (1, 1, 0, 0).
    static SimplicialComplex two_triangles() {
        return from_labelled_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}});
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// Dimension of the complex; -1 when there are no facets.
    int dimension() const {
        int dim = -1;
        for (const Face& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
        return dim;
    }

    bool contains_face(const Face& face) const {
        for (const Face& f : facets_)
            if (face_subset(face, f)) return true;
        return false;
    }

    /// Every face, the empty face included, as the downward closure of the facets.
    std::vector<Face> all_faces(size_t max_faces = kDefaultMaxFaces) const {
        std::set<Face> faces;
        faces.insert(Face{});
        for (const Face& f : facets_) {
            if (f.size() > 25)
                throw std::invalid_argument("all_faces: facet too large to enumerate subsets");
            size_t subsets = size_t{1} << f.size();
            for (size_t mask = 1; mask < subsets; ++mask) {
                Face sub;
                for (size_t b = 0; b < f.size(); ++b)
                    if (mask & (size_t{1} << b)) sub.push_back(f[b]);
                faces.insert(std::move(sub));
                if (faces.size() > max_faces)
                    throw std::runtime_error("all_faces: face count exceeds cap of " +
                                             std::to_string(max_faces));
            }
        }
        return std::vector<Face>(faces.begin(), faces.end());
    }

    /// (f_(-1), f_0, ..., f_(dim)).
    std::vector<Int> f_vector() const {
        std::vector<Int> counts(static_cast<size_t>(dimension()) + 2, 0);
        for (const Face& f : all_faces()) counts[f.size()] += 1;
        return counts;
    }

    /// sum_i (number of faces with i vertices) x^i.
    Polynomial f_polynomial() const {
        std::vector<Rational> c;
        for (const Int& v : f_vector()) c.emplace_back(v);
        return Polynomial(std::move(c));
    }

    Polynomial h_polynomial() const { return h_from_f(f_polynomial(), dimension() + 1); }

    /// h-vector padded to the window dim + 2 entries (h_0..h_(dim+1)).
    std::vector<Rational> h_vector() const {
        Polynomial h = h_polynomial();
        std::vector<Rational> v;
        for (int i = 0; i <= dimension() + 1; ++i) v.push_back(h.coeff(i));
        return v;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<Face> facets_;
};

/**
 * A subdivision: the refined complex together with the carrier of each of its
 * vertices in the base complex.  The carrier of a face is the union of its
 * vertex carriers.
 */
struct Subdivision {
    SimplicialComplex base;
    SimplicialComplex total;
    std::vector<Face> vertex_carrier;  // indexed by total vertex id; faces of base

    Face carrier(const Face& g) const {
        Face c;
        for (int v : g) c = face_union(c, vertex_carrier[static_cast<size_t>(v)]);
        return c;
    }

    /// All faces of total whose carrier is contained in the given base face.
    std::vector<Face> restriction(const Face& base_face) const {
        std::vector<Face> result;
        for (const Face& g : total.all_faces())
            if (face_subset(carrier(g), base_face)) result.push_back(g);
        return result;
    }

    /// Structural checks: carriers are faces of the base, and the restriction
    /// to each base face is pure of the right dimension with the Euler
    /// characteristic of a ball.
    ValidationReport validate() const {
        ValidationReport report;
        for (size_t v = 0; v < vertex_carrier.size(); ++v) {
            if (vertex_carrier[v].empty() || !base.contains_face(vertex_carrier[v]))
                report.violations.push_back({"carrier-face", "vertex " + std::to_string(v),
                                             "vertex carrier is not a nonempty face of the base"});
        }
        std::vector<Face> total_faces = total.all_faces();
        std::vector<Face> carriers;
        carriers.reserve(total_faces.size());
        for (const Face& g : total_faces) carriers.push_back(carrier(g));
        for (const Face& b : base.all_faces()) {
            if (b.empty()) continue;
            std::vector<size_t> inside;
            for (size_t i = 0; i < total_faces.size(); ++i)
                if (face_subset(carriers[i], b)) inside.push_back(i);
            size_t want = b.size();
            std::vector<Int> counts(want + 1, 0);
            bool oversized = false;
            for (size_t i : inside) {
                if (total_faces[i].size() >= counts.size()) {
                    counts.resize(total_faces[i].size() + 1, 0);
                    oversized = true;
                }
                counts[total_faces[i].size()] += 1;
            }
            if (oversized)
                report.violations.push_back({"restriction-purity", "base face of size " +
                                                 std::to_string(want),
                                             "restriction has a face larger than the base face"});
            for (size_t i : inside) {
                if (total_faces[i].size() >= want) continue;
                bool maximal = true;
                for (size_t j : inside)
                    if (total_faces[j].size() == total_faces[i].size() + 1 &&
                        face_subset(total_faces[i], total_faces[j])) {
                        maximal = false;
                        break;
                    }
                if (maximal && !total_faces[i].empty()) {
                    report.violations.push_back({"restriction-purity", "base face of size " +
                                                     std::to_string(want),
                                                 "restriction has a maximal face of smaller size"});
                    break;
                }
            }
            Int euler = 0;
            for (size_t s = 1; s < counts.size(); ++s)
                euler += (s % 2 == 1) ? counts[s] : -counts[s];
            if (euler != 1)
                report.violations.push_back({"restriction-euler", "base face of size " +
                                                 std::to_string(want),
                                             "Euler characteristic " + to_string(euler)});
        }
        return report;
    }
};

/// Identity subdivision: the complex itself, each vertex its own carrier.
inline Subdivision trivial_subdivision(const SimplicialComplex& K) {
    Subdivision S;
    S.base = K;
    S.total = K;
    for (int v = 0; v < K.vertex_count(); ++v) S.vertex_carrier.push_back({v});
    return S;
}

namespace detail {

inline std::string brace_label(const SimplicialComplex& K, const Face& f) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out << ",";
        out << K.labels()[static_cast<size_t>(f[i])];
    }
    out << "}";
    return out.str();
}

/// Maximal members of a downward-closed family of faces.
inline std::vector<Face> maximal_faces(const std::set<Face>& faces) {
    std::set<Face> dominated;
    for (const Face& f : faces) {
        if (f.empty()) continue;
        for (size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            for (size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            dominated.insert(std::move(sub));
        }
        dominated.insert(Face{});
    }
    std::vector<Face> result;
    for (const Face& f : faces)
        if (!dominated.count(f)) result.push_back(f);
    return result;
}

}  // namespace detail

/**
 * First barycentric subdivision: vertices are the nonempty faces of the base,
 * facets are the maximal chains under inclusion, and each vertex is carried by
 * the face it stands for.
 */
inline Subdivision barycentric_subdivision(const SimplicialComplex& K,
                                           size_t max_faces = kDefaultMaxFaces) {
    std::vector<Face> base_faces;
    for (const Face& f : K.all_faces(max_faces))
        if (!f.empty()) base_faces.push_back(f);
    std::map<Face, int> vertex_of;
    std::vector<std::string> labels;
    for (const Face& f : base_faces) {
        vertex_of[f] = static_cast<int>(labels.size());
        labels.push_back(detail::brace_label(K, f));
    }
    std::vector<Face> facets;
    for (const Face& f : K.facets()) {
        Face order = f;
        std::sort(order.begin(), order.end());
        do {
            Face chain_face;
            Face prefix;
            for (int v : order) {
                prefix.push_back(v);
                Face key = prefix;
                std::sort(key.begin(), key.end());
                chain_face.push_back(vertex_of.at(key));
            }
            std::sort(chain_face.begin(), chain_face.end());
            facets.push_back(std::move(chain_face));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    Subdivision S;
    S.base = K;
    S.total = SimplicialComplex(std::move(labels), std::move(facets));
    S.vertex_carrier = base_faces;
    return S;
}

/**
 * r-fold edgewise subdivision.  Vertices are the maps V -> {0..r} with total
 * r whose support is a face; a set of vertices spans a face when the supports
 * unite to a face and the prefix-sum vectors pairwise differ by a 0/1 vector.
 */
inline Subdivision edgewise_subdivision(const SimplicialComplex& K, int r,
                                        size_t max_faces = kDefaultMaxFaces) {
    if (r < 1) throw std::invalid_argument("edgewise_subdivision: r must be at least 1");
    const int V = K.vertex_count();
    std::vector<std::vector<int>> points;  // composition vectors, length V
    std::vector<Face> supports;
    std::vector<int> parts;
    auto emit_compositions = [&](const Face& s, int remaining, auto&& self) -> void {
        if (parts.size() + 1 == s.size()) {
            parts.push_back(remaining);
            std::vector<int> pt(static_cast<size_t>(V), 0);
            for (size_t i = 0; i < s.size(); ++i) pt[static_cast<size_t>(s[i])] = parts[i];
            points.push_back(std::move(pt));
            supports.push_back(s);
            parts.pop_back();
            return;
        }
        int slots_left = static_cast<int>(s.size() - parts.size()) - 1;
        for (int first = 1; first <= remaining - slots_left; ++first) {
            parts.push_back(first);
            self(s, remaining - first, self);
            parts.pop_back();
        }
    };
    for (const Face& s : K.all_faces(max_faces)) {
        if (s.empty() || s.size() > static_cast<size_t>(r)) continue;
        emit_compositions(s, r, emit_compositions);
    }
    const int P = static_cast<int>(points.size());
    std::vector<std::vector<int>> iota(points.size(), std::vector<int>(static_cast<size_t>(V), 0));
    for (int p = 0; p < P; ++p) {
        int acc = 0;
        for (int v = 0; v < V; ++v) {
            acc += points[static_cast<size_t>(p)][static_cast<size_t>(v)];
            iota[static_cast<size_t>(p)][static_cast<size_t>(v)] = acc;
        }
    }
    auto compatible = [&](int a, int b) {
        bool le = true, ge = true;
        for (int v = 0; v < V; ++v) {
            int diff = iota[static_cast<size_t>(a)][static_cast<size_t>(v)] -
                       iota[static_cast<size_t>(b)][static_cast<size_t>(v)];
            if (diff < 0 || diff > 1) le = false;
            if (diff > 0 || diff < -1) ge = false;
            if (!le && !ge) return false;
        }
        return true;
    };
    std::vector<std::vector<char>> adj(static_cast<size_t>(P), std::vector<char>(static_cast<size_t>(P), 0));
    for (int a = 0; a < P; ++a)
        for (int b = a + 1; b < P; ++b)
            adj[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = compatible(a, b) ? 1 : 0;

    // grow faces in canonical vertex order
    std::set<Face> faces;
    std::vector<std::pair<Face, Face>> frontier;  // (face, support union)
    faces.insert(Face{});
    for (int p = 0; p < P; ++p) {
        faces.insert(Face{p});
        frontier.push_back({Face{p}, supports[static_cast<size_t>(p)]});
    }
    while (!frontier.empty()) {
        std::vector<std::pair<Face, Face>> next;
        for (const auto& [face, support] : frontier) {
            for (int w = face.back() + 1; w < P; ++w) {
                bool ok = true;
                for (int m : face)
                    if (!adj[static_cast<size_t>(m)][static_cast<size_t>(w)]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                Face u = face_union(support, supports[static_cast<size_t>(w)]);
                if (u != support && !K.contains_face(u)) continue;
                Face bigger = face;
                bigger.push_back(w);
                faces.insert(bigger);
                if (faces.size() > max_faces)
                    throw std::runtime_error("edgewise_subdivision: face count exceeds cap");
                next.push_back({std::move(bigger), std::move(u)});
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::string> labels;
    for (int p = 0; p < P; ++p) {
        std::ostringstream out;
        out << "[";
        for (int v = 0; v < V; ++v) {
            if (v) out << ",";
            out << points[static_cast<size_t>(p)][static_cast<size_t>(v)];
        }
        out << "]";
        labels.push_back(out.str());
    }
    Subdivision S;
    S.base = K;
    S.total = SimplicialComplex(std::move(labels), detail::maximal_faces(faces));
    S.vertex_carrier = supports;
    return S;
}

/// second refines the total complex of first; carriers compose by union.
inline Subdivision compose_subdivisions(const Subdivision& first, const Subdivision& second) {
    if (second.base.vertex_count() != first.total.vertex_count())
        throw std::invalid_argument("compose_subdivisions: middle complexes do not match");
    Subdivision S;
    S.base = first.base;
    S.total = second.total;
    for (const Face& mid : second.vertex_carrier) S.vertex_carrier.push_back(first.carrier(mid));
    return S;
}

/// Barycentric subdivision refined r-fold edgewise.
inline Subdivision colored_barycentric_subdivision(const SimplicialComplex& K, int r,
                                                   size_t max_faces = kDefaultMaxFaces) {
    Subdivision sd = barycentric_subdivision(K, max_faces);
    Subdivision esd = edgewise_subdivision(sd.total, r, max_faces);
    return compose_subdivisions(sd, esd);
}

/**
 * Edgewise subdivision of the s-skeleton, then cones over the faces of each
 * higher dimension in turn, the apex of each cone carried by its face.
 */
inline Subdivision sdrs_subdivision(const SimplicialComplex& K, int r, int s,
                                    size_t max_faces = kDefaultMaxFaces) {
    if (r < 1) throw std::invalid_argument("sdrs_subdivision: r must be at least 1");
    if (s < 1) throw std::invalid_argument("sdrs_subdivision: s must be at least 1");
    std::vector<Face> skeleton_faces;
    for (const Face& f : K.all_faces(max_faces))
        if (!f.empty() && f.size() <= static_cast<size_t>(s) + 1) skeleton_faces.push_back(f);
    SimplicialComplex skeleton(K.labels(), skeleton_faces);
    Subdivision E = edgewise_subdivision(skeleton, r, max_faces);

    std::vector<std::string> labels = E.total.labels();
    std::vector<Face> carriers = E.vertex_carrier;
    std::set<Face> working;
    for (const Face& f : E.total.all_faces(max_faces)) working.insert(f);

    auto face_carrier = [&](const Face& g) {
        Face c;
        for (int v : g) c = face_union(c, carriers[static_cast<size_t>(v)]);
        return c;
    };

    std::vector<Face> base_faces = K.all_faces(max_faces);
    std::stable_sort(base_faces.begin(), base_faces.end(),
                     [](const Face& a, const Face& b) { return a.size() < b.size(); });
    for (const Face& B : base_faces) {
        if (B.size() < static_cast<size_t>(s) + 2) continue;
        std::vector<Face> sub;
        for (const Face& g : working)
            if (face_subset(face_carrier(g), B)) sub.push_back(g);
        int apex = static_cast<int>(labels.size());
        labels.push_back("*" + detail::brace_label(K, B));
        carriers.push_back(B);
        for (const Face& g : sub) {
            Face bigger = g;
            bigger.push_back(apex);  // apex id is larger than every existing id
            working.insert(std::move(bigger));
            if (working.size() > max_faces)
                throw std::runtime_error("sdrs_subdivision: face count exceeds cap");
        }
    }
    Subdivision S;
    S.base = K;
    S.total = SimplicialComplex(std::move(labels), detail::maximal_faces(working));
    S.vertex_carrier = std::move(carriers);
    return S;
}

struct UniformityMismatch {
    Face base_face;
    int size = 0;
    Int expected;
    Int actual;
};

struct UniformityReport {
    std::vector<UniformityMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/**
 * For every face of the base, the restriction of the subdivision must have
 * exactly the face counts of the triangle row matching its vertex count.
 */
inline UniformityReport uniformity_check(const Subdivision& S, const FTriangle& F) {
    if (S.base.dimension() + 1 > F.d)
        throw std::invalid_argument("uniformity_check: triangle too small for the base");
    UniformityReport report;
    std::vector<Face> total_faces = S.total.all_faces();
    std::vector<Face> carriers;
    carriers.reserve(total_faces.size());
    for (const Face& g : total_faces) carriers.push_back(S.carrier(g));
    for (const Face& b : S.base.all_faces()) {
        size_t window = b.size();
        std::vector<Int> counts(window + 1, 0);
        for (size_t i = 0; i < total_faces.size(); ++i)
            if (face_subset(carriers[i], b)) {
                if (total_faces[i].size() >= counts.size()) counts.resize(total_faces[i].size() + 1, 0);
                counts[total_faces[i].size()] += 1;
            }
        for (size_t i = 0; i < counts.size(); ++i) {
            Int expected = i <= window ? F.entry(static_cast<int>(i), static_cast<int>(window)) : Int(0);
            if (counts[i] != expected)
                report.mismatches.push_back({b, static_cast<int>(i), expected, counts[i]});
        }
    }
    return report;
}

inline void require_simplex_base(const Subdivision& S, const char* who) {
    Face all;
    for (int v = 0; v < S.base.vertex_count(); ++v) all.push_back(v);
    if (S.base.facets().size() != 1 || S.base.facets()[0] != all)
        throw std::invalid_argument(std::string(who) + ": base must be a full simplex");
}

/// Counts of faces carried by the whole simplex (interior faces), by vertex count.
inline std::vector<Int> interior_face_counts(const Subdivision& S) {
    require_simplex_base(S, "interior_face_counts");
    const int n = S.base.vertex_count();
    Face all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    std::vector<Int> counts(static_cast<size_t>(n) + 1, 0);
    for (const Face& g : S.total.all_faces())
        if (S.carrier(g) == all) counts[g.size()] += 1;
    return counts;
}

/// Local h-polynomial by inclusion-exclusion of restriction h-polynomials
/// over the faces of the base simplex.
inline Polynomial local_h(const Subdivision& S) {
    require_simplex_base(S, "local_h");
    const int n = S.base.vertex_count();
    std::vector<Face> total_faces = S.total.all_faces();
    std::vector<Face> carriers;
    carriers.reserve(total_faces.size());
    for (const Face& g : total_faces) carriers.push_back(S.carrier(g));
    Polynomial acc;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Face b;
        for (int v = 0; v < n; ++v)
            if (mask & (size_t{1} << v)) b.push_back(v);
        std::vector<Rational> counts(b.size() + 1, Rational(0));
        for (size_t i = 0; i < total_faces.size(); ++i)
            if (face_subset(carriers[i], b)) counts.at(total_faces[i].size()) += 1;
        Polynomial h = h_from_f(Polynomial(std::move(counts)), static_cast<int>(b.size()));
        Rational c((n - static_cast<int>(b.size())) % 2 == 0 ? 1 : -1);
        acc += c * h;
    }
    return acc;
}

/**
 * Faces of the subdivided simplex that survive after deleting everything
 * carried by the chosen boundary facets; h is taken on the window n.
 */
struct RelativeComplex {
    int window = 0;
    std::vector<Face> kept;  // surviving faces, the empty face possibly included
    Polynomial f;
    Polynomial h;
};

/// The n boundary facets of the base simplex, in lexicographic order.
inline std::vector<Face> boundary_facets(const Subdivision& S) {
    require_simplex_base(S, "boundary_facets");
    const int n = S.base.vertex_count();
    std::vector<Face> result;
    for (int skip = n - 1; skip >= 0; --skip) {
        Face f;
        for (int v = 0; v < n; ++v)
            if (v != skip) f.push_back(v);
        result.push_back(std::move(f));
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline RelativeComplex relative_without_facets(const Subdivision& S,
                                               const std::vector<Face>& chosen) {
    require_simplex_base(S, "relative_without_facets");
    const int n = S.base.vertex_count();
    for (const Face& c : chosen)
        if (c.size() + 1 != static_cast<size_t>(n) || !S.base.contains_face(c))
            throw std::invalid_argument("relative_without_facets: not a boundary facet");
    RelativeComplex rel;
    rel.window = n;
    std::vector<Rational> counts(static_cast<size_t>(n) + 1, Rational(0));
    for (const Face& g : S.total.all_faces()) {
        Face carrier = S.carrier(g);
        bool removed = false;
        for (const Face& c : chosen)
            if (face_subset(carrier, c)) {
                removed = true;
                break;
            }
        if (removed) continue;
        rel.kept.push_back(g);
        counts.at(g.size()) += 1;
    }
    rel.f = Polynomial(std::move(counts));
    rel.h = h_from_f(rel.f, n);
    return rel;
}

/// Deletes the lexicographically first k boundary facets.
inline RelativeComplex relative_without_first_facets(const Subdivision& S, int k) {
    std::vector<Face> all = boundary_facets(S);
    if (k < 0 || k > static_cast<int>(all.size()))
        throw std::invalid_argument("relative_without_first_facets: k out of range");
    all.resize(static_cast<size_t>(k));
    return relative_without_facets(S, all);
}

struct SymmetryCheck {
    bool ok = false;
    Polynomial h_deleted;             // h after deleting the chosen facets
    Polynomial h_complement_deleted;  // h after deleting the complementary facets
};

/// Reversal duality: deleting a set of boundary facets and deleting the
/// complementary set produce h-polynomials that are reverses of each other.
inline SymmetryCheck relative_symmetry_check(const Subdivision& S,
                                             const std::vector<Face>& chosen) {
    std::vector<Face> complement;
    for (const Face& f : boundary_facets(S))
        if (std::find(chosen.begin(), chosen.end(), f) == chosen.end())
            complement.push_back(f);
    SymmetryCheck check;
    RelativeComplex a = relative_without_facets(S, chosen);
    RelativeComplex b = relative_without_facets(S, complement);
    check.h_deleted = a.h;
    check.h_complement_deleted = b.h;
    check.ok = reversed(a.h, a.window) == b.h;
    return check;
}

}  // namespace unitri
