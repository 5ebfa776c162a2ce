#pragma once

#include "unitri/combinatorics.hpp"
#include "unitri/polynomial.hpp"
#include "unitri/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitri {

/**
 * Triangular array F = (f(i, j)), 0 <= i <= j <= d, of nonnegative integers.
 * Row j collects the face counts of a triangulated (j-1)-simplex by the number
 * of vertices i of a face, with f(0, j) = 1 counting the empty face.
 *
 * Immutable after construction; catalog constructors can simply be re-invoked
 * with a larger d since every row is computed by row-local formulas.
 */
struct FTriangle {
    int d = 0;
    std::vector<std::vector<Int>> rows;  // rows[n] has length n + 1
    std::string name;                    // optional catalog label
    std::map<std::string, long> params;  // optional catalog parameters

    FTriangle() = default;

    FTriangle(int size, std::vector<std::vector<Int>> data, std::string label = {},
              std::map<std::string, long> parameters = {})
        : d(size), rows(std::move(data)), name(std::move(label)), params(std::move(parameters)) {
        if (d < 0) throw std::invalid_argument("FTriangle: negative size");
        if (rows.size() != static_cast<size_t>(d) + 1)
            throw std::invalid_argument("FTriangle: expected " + std::to_string(d + 1) + " rows");
        for (int n = 0; n <= d; ++n) {
            if (rows[static_cast<size_t>(n)].size() != static_cast<size_t>(n) + 1)
                throw std::invalid_argument("FTriangle: row " + std::to_string(n) +
                                            " must have length " + std::to_string(n + 1));
            for (const Int& v : rows[static_cast<size_t>(n)])
                if (v < 0) throw std::invalid_argument("FTriangle: negative entry in row " + std::to_string(n));
        }
    }

    const Int& entry(int i, int j) const {
        if (j < 0 || j > d || i < 0 || i > j) throw std::out_of_range("FTriangle::entry");
        return rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }

    /// Row n as a polynomial: sum_i f(i, n) x^i.
    Polynomial f_poly(int n) const {
        if (n < 0 || n > d) throw std::out_of_range("FTriangle::f_poly");
        std::vector<Rational> c;
        c.reserve(static_cast<size_t>(n) + 1);
        for (const Int& v : rows[static_cast<size_t>(n)]) c.emplace_back(v);
        return Polynomial(std::move(c));
    }

    std::string describe() const {
        std::ostringstream out;
        out << (name.empty() ? "custom" : name);
        for (const auto& [key, value] : params) out << " " << key << "=" << value;
        out << " (d=" << d << ")";
        return out.str();
    }
};

/**
 * The four arrays attached to a face triangle, all rows indexed n = 0..d:
 *   h:          h[n] = h_from_f(f[n], n)
 *   interior_h: interior_h[n] = reversed(h[n], n)
 *   interior_f: interior_f[n] = f_from_h(interior_h[n], n), counting interior faces
 *   local_h:    local_h[n] = sum_k (-1)^(n-k) C(n, k) h[k]
 */
struct DerivedTriangles {
    int d = 0;
    std::vector<Polynomial> f;
    std::vector<Polynomial> h;
    std::vector<Polynomial> interior_h;
    std::vector<Polynomial> interior_f;
    std::vector<Polynomial> local_h;
};

inline DerivedTriangles derive(const FTriangle& F) {
    DerivedTriangles D;
    D.d = F.d;
    D.f.reserve(static_cast<size_t>(F.d) + 1);
    for (int n = 0; n <= F.d; ++n) D.f.push_back(F.f_poly(n));
    for (int n = 0; n <= F.d; ++n) {
        D.h.push_back(h_from_f(D.f[static_cast<size_t>(n)], n));
        D.interior_h.push_back(reversed(D.h[static_cast<size_t>(n)], n));
        D.interior_f.push_back(f_from_h(D.interior_h[static_cast<size_t>(n)], n));
    }
    for (int n = 0; n <= F.d; ++n) {
        Polynomial ell;
        for (int k = 0; k <= n; ++k) {
            Rational c(binomial(n, k) * ((n - k) % 2 == 0 ? 1 : -1));
            ell += c * D.h[static_cast<size_t>(k)];
        }
        D.local_h.push_back(ell);
    }
    return D;
}

/**
 * Interior face counts of row n recovered from rows 0..n alone by
 * inclusion-exclusion over the faces of the simplex:
 *   sum_m (-1)^(n-m) C(n, m) f[m].
 * Independent of the h-route in derive(); the two agree exactly when the rows
 * are mutually consistent, which makes this the discriminating check for
 * corrupted data.
 */
inline Polynomial interior_f_by_inclusion_exclusion(const FTriangle& F, int n) {
    Polynomial acc;
    for (int m = 0; m <= n; ++m) {
        Rational c(binomial(n, m) * ((n - m) % 2 == 0 ? 1 : -1));
        acc += c * F.f_poly(m);
    }
    return acc;
}

struct Violation {
    std::string check;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    std::string str() const {
        std::ostringstream out;
        for (const auto& v : violations)
            out << v.check << " at " << v.where << ": " << v.message << "\n";
        return out.str();
    }
};

/**
 * Structural and arithmetic consistency checks.  Always verified:
 *   - f(0, j) = 1 for all j;
 *   - the reflection identity: interior-f row n evaluated at -1-x equals
 *     (-1)^n times row n, with the interior counts taken from the
 *     inclusion-exclusion route so that the check ties rows together.
 * With strict = true, additionally:
 *   - f(1, 1) = 1 and f(i, j) >= C(j, i);
 *   - h rows and interior-f rows have nonnegative integer coefficients;
 *   - h(n, n) = 0 for n >= 1 (triangulated simplices are balls);
 *   - local-h rows are symmetric about n/2 and nonnegative.
 */
inline ValidationReport validate(const FTriangle& F, bool strict = false) {
    ValidationReport report;
    auto where = [](int i, int j) {
        return "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
    };
    for (int j = 0; j <= F.d; ++j) {
        if (F.entry(0, j) != 1)
            report.violations.push_back({"unit-empty-face", where(0, j),
                                         "f(0, j) must be 1, found " + to_string(F.entry(0, j))});
    }
    for (int n = 0; n <= F.d; ++n) {
        Polynomial interior = interior_f_by_inclusion_exclusion(F, n);
        Polynomial lhs = reflect(interior);
        Polynomial rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * F.f_poly(n);
        if (lhs != rhs)
            report.violations.push_back(
                {"reflection-identity", "row " + std::to_string(n),
                 "interior row at -1-x gives " + lhs.str() + ", expected " + rhs.str()});
    }
    if (strict) {
        if (F.d >= 1 && F.entry(1, 1) != 1)
            report.violations.push_back({"vertex-row", where(1, 1), "f(1, 1) must be 1"});
        for (int j = 0; j <= F.d; ++j)
            for (int i = 0; i <= j; ++i)
                if (F.entry(i, j) < binomial(j, i))
                    report.violations.push_back(
                        {"binomial-lower-bound", where(i, j),
                         to_string(F.entry(i, j)) + " < C(" + std::to_string(j) + ", " +
                             std::to_string(i) + ")"});
        DerivedTriangles D = derive(F);
        for (int n = 0; n <= F.d; ++n) {
            const Polynomial& h = D.h[static_cast<size_t>(n)];
            if (!h.has_integer_coeffs() || !h.has_nonnegative_coeffs())
                report.violations.push_back({"h-integrality", "row " + std::to_string(n),
                                             "h row is " + h.str()});
            if (n >= 1 && h.coeff(n) != 0)
                report.violations.push_back({"h-top-coefficient", "row " + std::to_string(n),
                                             "h(n, n) must vanish, h row is " + h.str()});
            const Polynomial& fi = D.interior_f[static_cast<size_t>(n)];
            if (!fi.has_integer_coeffs() || !fi.has_nonnegative_coeffs())
                report.violations.push_back({"interior-f-integrality", "row " + std::to_string(n),
                                             "interior-f row is " + fi.str()});
            const Polynomial& ell = D.local_h[static_cast<size_t>(n)];
            if (!is_symmetric(ell, n))
                report.violations.push_back({"local-h-symmetry", "row " + std::to_string(n),
                                             "local-h row " + ell.str() + " is not symmetric"});
            if (!ell.has_nonnegative_coeffs())
                report.violations.push_back({"local-h-nonnegativity", "row " + std::to_string(n),
                                             "local-h row is " + ell.str()});
        }
    }
    return report;
}

namespace detail {

inline std::vector<std::vector<Int>> rows_from_polys(const std::vector<Polynomial>& polys,
                                                     const char* who) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(polys.size());
    for (size_t n = 0; n < polys.size(); ++n) {
        std::vector<Int> row(n + 1);
        if (polys[n].degree() > static_cast<int>(n))
            throw std::logic_error(std::string(who) + ": row degree exceeds row index");
        for (size_t i = 0; i <= n; ++i) {
            Rational c = polys[n].coeff(static_cast<int>(i));
            if (!is_integer(c) || c < 0)
                throw std::logic_error(std::string(who) + ": non-integral or negative face count");
            row[i] = numerator(c);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Identity triangulation: f(i, n) = C(n, i).
inline FTriangle trivial_triangle(int d) {
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= d; ++n) {
        std::vector<Int> row;
        for (int i = 0; i <= n; ++i) row.push_back(binomial(n, i));
        rows.push_back(std::move(row));
    }
    return FTriangle(d, std::move(rows), "trivial");
}

/**
 * First barycentric subdivision.  Interior counts come first,
 * interior_f(k, n) = k! S(n, k), and the full rows follow by summing the
 * interior counts over the faces of the simplex.
 */
inline FTriangle barycentric_triangle(int d) {
    std::vector<std::vector<Int>> rows;
    for (int n = 0; n <= d; ++n) {
        std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
        for (int m = 0; m <= n; ++m) {
            Int outer = binomial(n, m);
            for (int k = 0; k <= m; ++k)
                row[static_cast<size_t>(k)] += outer * factorial(k) * stirling2(m, k);
        }
        rows.push_back(std::move(row));
    }
    return FTriangle(d, std::move(rows), "barycentric");
}

/**
 * r-fold edgewise subdivision.  Row n is recovered from its h-polynomial,
 * which is the <r, 0> section of (1 + x + ... + x^(r-1))^n.
 */
inline FTriangle edgewise_triangle(int r, int d) {
    if (r < 1) throw std::invalid_argument("edgewise_triangle: r must be at least 1");
    Polynomial ruler;
    {
        std::vector<Rational> ones(static_cast<size_t>(r), Rational(1));
        ruler = Polynomial(std::move(ones));
    }
    std::vector<Polynomial> f_rows;
    for (int n = 0; n <= d; ++n) {
        Polynomial h = section(ruler.pow(n), r, 0);
        f_rows.push_back(f_from_h(h, n));
    }
    return FTriangle(d, detail::rows_from_polys(f_rows, "edgewise_triangle"), "edgewise",
                     {{"r", r}});
}

/**
 * Linear extension of the interior rows: x^m maps to interior_f[m].  Sends the
 * face polynomial of a complex to the face polynomial of its subdivision.
 */
inline Polynomial subdivide_f_polynomial(const DerivedTriangles& D, const Polynomial& p) {
    if (p.degree() > D.d)
        throw std::invalid_argument("subdivide_f_polynomial: degree exceeds triangle size");
    Polynomial acc;
    for (int m = 0; m <= p.degree(); ++m) {
        if (p.coeff(m) == 0) continue;
        acc += p.coeff(m) * D.interior_f[static_cast<size_t>(m)];
    }
    return acc;
}

/**
 * Triangle of the two-step subdivision that first refines every cell by
 * `inner` and then refines the result by `outer`; row n is the outer operator
 * applied to inner's row n.
 */
inline FTriangle compose(const FTriangle& inner, const FTriangle& outer) {
    if (inner.d != outer.d)
        throw std::invalid_argument("compose: triangles must have matching size");
    DerivedTriangles D = derive(outer);
    std::vector<Polynomial> f_rows;
    for (int n = 0; n <= inner.d; ++n) f_rows.push_back(subdivide_f_polynomial(D, inner.f_poly(n)));
    std::map<std::string, long> params;
    for (const auto& [k, v] : inner.params) params["inner_" + k] = v;
    for (const auto& [k, v] : outer.params) params["outer_" + k] = v;
    return FTriangle(inner.d, detail::rows_from_polys(f_rows, "compose"),
                     inner.name + "*" + outer.name, std::move(params));
}

/// r-colored barycentric subdivision: barycentric first, then r-fold edgewise.
inline FTriangle colored_barycentric_triangle(int r, int d) {
    if (r < 1) throw std::invalid_argument("colored_barycentric_triangle: r must be at least 1");
    FTriangle t = compose(barycentric_triangle(d), edgewise_triangle(r, d));
    t.name = "colored";
    t.params = {{"r", r}};
    return t;
}

/// The 2-colored barycentric triangle under its customary alias.
inline FTriangle interval_triangle(int d) {
    FTriangle t = colored_barycentric_triangle(2, d);
    t.name = "interval";
    t.params = {};
    return t;
}

/**
 * Edgewise subdivision of the s-skeleton followed by coning over each face of
 * larger dimension, one dimension at a time.  Rows up to s + 1 coincide with
 * the edgewise rows; beyond that, the triangulated boundary of the simplex is
 * assembled from the interior counts of the earlier rows and the cone
 * contributes a factor 1 + x.
 */
inline FTriangle sdrs_triangle(int r, int s, int d) {
    if (r < 1) throw std::invalid_argument("sdrs_triangle: r must be at least 1");
    if (s < 1 || s >= r) throw std::invalid_argument("sdrs_triangle: need 1 <= s < r");
    FTriangle edge = edgewise_triangle(r, std::min(d, s + 1));
    std::vector<Polynomial> f_rows;
    std::vector<Polynomial> interior_rows;
    for (int n = 0; n <= d; ++n) {
        Polynomial f_row;
        if (n <= s + 1) {
            f_row = edge.f_poly(n);
        } else {
            Polynomial boundary;
            for (int m = 0; m < n; ++m)
                boundary += Rational(binomial(n, m)) * interior_rows[static_cast<size_t>(m)];
            f_row = Polynomial({1, 1}) * boundary;
        }
        f_rows.push_back(f_row);
        Polynomial h = h_from_f(f_row, n);
        interior_rows.push_back(f_from_h(reversed(h, n), n));
    }
    return FTriangle(d, detail::rows_from_polys(f_rows, "sdrs_triangle"), "sdrs",
                     {{"r", r}, {"s", s}});
}

}  // namespace unitri
