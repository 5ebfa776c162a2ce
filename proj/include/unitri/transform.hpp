#pragma once

#include "unitri/combinatorics.hpp"
#include "unitri/ftriangle.hpp"
#include "unitri/polynomial.hpp"

#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

/**
 * Closed form for the coefficient polynomial p(n, k):
 *   sum_{r=0}^{n} local_h[r] * sum_{i} C(n-k, i) C(k, r-i) x^(k-r+i),
 * with binomials vanishing outside their natural range.
 */
inline Polynomial coeff_poly_formula(const DerivedTriangles& D, int n, int k) {
    if (n < 0 || n > D.d || k < 0 || k > n)
        throw std::invalid_argument("coeff_poly_formula: indices out of range");
    Polynomial result;
    for (int r = 0; r <= n; ++r) {
        const Polynomial& local = D.local_h[static_cast<size_t>(r)];
        if (local.is_zero()) continue;
        Polynomial inner;
        for (int i = std::max(0, r - k); i <= std::min(r, n - k); ++i) {
            Rational c(binomial(n - k, i) * binomial(k, r - i));
            if (c == 0) continue;
            inner += Polynomial::monomial(k - r + i, c);
        }
        result += local * inner;
    }
    return result;
}

/**
 * All coefficient polynomials for levels 0..n by the two-term recurrence
 *   p(m, 0) = h[m],   p(m, k) = p(m, k-1) + (x - 1) p(m-1, k-1).
 * Returned as table[m][k].
 */
inline std::vector<std::vector<Polynomial>> coeff_poly_table(const DerivedTriangles& D, int n) {
    if (n < 0 || n > D.d) throw std::invalid_argument("coeff_poly_table: level out of range");
    Polynomial x_minus_1({-1, 1});
    std::vector<std::vector<Polynomial>> table(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        auto& row = table[static_cast<size_t>(m)];
        row.resize(static_cast<size_t>(m) + 1);
        row[0] = D.h[static_cast<size_t>(m)];
        for (int k = 1; k <= m; ++k)
            row[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] +
                x_minus_1 * table[static_cast<size_t>(m - 1)][static_cast<size_t>(k - 1)];
    }
    return table;
}

/// p(n, k) for k = 0..n via the recurrence.
inline std::vector<Polynomial> coeff_poly_row(const DerivedTriangles& D, int n) {
    return coeff_poly_table(D, n).back();
}

inline Polynomial coeff_poly_recurrence(const DerivedTriangles& D, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("coeff_poly_recurrence: indices out of range");
    return coeff_poly_row(D, n)[static_cast<size_t>(k)];
}

/// Face polynomial of the triangulated boundary of the (n-1)-simplex:
/// interior counts summed over the proper faces, sum_{m<n} C(n, m) interior_f[m].
inline Polynomial boundary_f(const DerivedTriangles& D, int n) {
    if (n < 1 || n > D.d) throw std::invalid_argument("boundary_f: level out of range");
    Polynomial acc;
    for (int m = 0; m < n; ++m)
        acc += Rational(binomial(n, m)) * D.interior_f[static_cast<size_t>(m)];
    return acc;
}

/// h-polynomial of the triangulated boundary, computed from boundary_f on the
/// window n - 1.  This route is independent of the coefficient polynomials.
inline Polynomial boundary_h_direct(const DerivedTriangles& D, int n) {
    return h_from_f(boundary_f(D, n), n - 1);
}

/// Same value as boundary_h_direct, obtained as sum_{k=0}^{n-1} p(n-1, k).
inline Polynomial boundary_h(const DerivedTriangles& D, int n) {
    if (n < 1 || n > D.d + 1) throw std::invalid_argument("boundary_h: level out of range");
    Polynomial acc;
    for (const Polynomial& p : coeff_poly_row(D, n - 1)) acc += p;
    return acc;
}

/**
 * The coefficient table at level n: matrix entry (k, j) is the j-th
 * coefficient of p(n, k).  Audited invariants (recorded in `report`, never
 * assumed):
 *   - entries are nonnegative integers;
 *   - symmetry p(n, k, j) = p(n, n-k, n-j);
 *   - each row sums to h[n](1);
 *   - column sums match the boundary h-polynomial at level n + 1, computed by
 *     the independent face-count route.
 * `extra` carries h[n+1] - boundary_h(n+1) when row n + 1 exists: the
 * possibly-negative continuation polynomial used by the top-index recurrence.
 */
struct CoeffTable {
    int n = 0;
    std::vector<Polynomial> polys;        // p(n, k), k = 0..n
    std::vector<std::vector<Int>> matrix; // matrix[k][j], valid where report is clean
    Polynomial extra;                     // h[n+1] - boundary_h(n+1), if available
    bool has_extra = false;
    ValidationReport report;
};

inline CoeffTable coeff_table(const DerivedTriangles& D, int n, bool cross_check = false) {
    if (n < 0 || n > D.d) throw std::invalid_argument("coeff_table: level out of range");
    CoeffTable table;
    table.n = n;
    table.polys = coeff_poly_row(D, n);
    if (cross_check) {
        for (int k = 0; k <= n; ++k) {
            Polynomial direct = coeff_poly_formula(D, n, k);
            if (direct != table.polys[static_cast<size_t>(k)])
                table.report.violations.push_back(
                    {"route-agreement", "k=" + std::to_string(k),
                     "closed form gives " + direct.str() + ", recurrence gives " +
                         table.polys[static_cast<size_t>(k)].str()});
        }
    }
    table.matrix.assign(static_cast<size_t>(n) + 1, std::vector<Int>(static_cast<size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) {
        const Polynomial& p = table.polys[static_cast<size_t>(k)];
        if (p.degree() > n)
            table.report.violations.push_back({"degree-bound", "k=" + std::to_string(k),
                                               "degree " + std::to_string(p.degree()) + " > n"});
        for (int j = 0; j <= n; ++j) {
            Rational c = p.coeff(j);
            if (!is_integer(c) || c < 0) {
                table.report.violations.push_back(
                    {"nonnegative-integrality",
                     "k=" + std::to_string(k) + ", j=" + std::to_string(j),
                     "entry " + to_string(c)});
                continue;
            }
            table.matrix[static_cast<size_t>(k)][static_cast<size_t>(j)] = numerator(c);
        }
    }
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j)
            if (table.polys[static_cast<size_t>(k)].coeff(j) !=
                table.polys[static_cast<size_t>(n - k)].coeff(n - j)) {
                table.report.violations.push_back(
                    {"symmetry", "k=" + std::to_string(k) + ", j=" + std::to_string(j),
                     "p(n, k, j) != p(n, n-k, n-j)"});
            }
    Rational row_total = D.h[static_cast<size_t>(n)].coeff_sum();
    for (int k = 0; k <= n; ++k) {
        Rational s = table.polys[static_cast<size_t>(k)].coeff_sum();
        if (s != row_total)
            table.report.violations.push_back({"row-sum", "k=" + std::to_string(k),
                                               "row sums to " + to_string(s) + ", expected " +
                                                   to_string(row_total)});
    }
    if (n + 1 <= D.d) {
        Polynomial expected = boundary_h_direct(D, n + 1);
        Polynomial column_sums;
        for (const Polynomial& p : table.polys) column_sums += p;
        if (column_sums != expected)
            table.report.violations.push_back(
                {"column-sum", "level " + std::to_string(n + 1),
                 "columns sum to " + column_sums.str() + ", boundary route gives " +
                     expected.str()});
        table.extra = D.h[static_cast<size_t>(n + 1)] - expected;
        table.has_extra = true;
    }
    return table;
}

inline CoeffTable coeff_table(const FTriangle& F, int n, bool cross_check = false) {
    return coeff_table(derive(F), n, cross_check);
}

/// h-polynomial of the subdivided complex from the h-vector of the base:
/// sum_k h_k p(n, k).
inline Polynomial apply_h(const CoeffTable& table, std::span<const Rational> hvec) {
    if (hvec.size() > static_cast<size_t>(table.n) + 1)
        throw std::invalid_argument("apply_h: h-vector longer than table level + 1");
    Polynomial acc;
    for (size_t k = 0; k < hvec.size(); ++k) {
        if (hvec[k] == 0) continue;
        acc += hvec[k] * table.polys[k];
    }
    return acc;
}

inline Polynomial apply_h(const DerivedTriangles& D, const std::vector<Rational>& hvec, int n) {
    return apply_h(coeff_table(D, n), hvec);
}

inline Polynomial apply_h(const FTriangle& F, const std::vector<Rational>& hvec, int n) {
    return apply_h(derive(F), hvec, n);
}

/**
 * h-level subdivision operator: the conjugate of the f-level operator by the
 * f <-> h change of basis on window n.  Computed both as the conjugation and
 * as a coefficient-table combination; the two routes are asserted equal.
 */
inline Polynomial subdivide_h_polynomial(const DerivedTriangles& D, const Polynomial& h, int n) {
    if (h.degree() > n)
        throw std::invalid_argument("subdivide_h_polynomial: degree exceeds window");
    Polynomial via_f = h_from_f(subdivide_f_polynomial(D, f_from_h(h, n)), n);
    std::vector<Rational> hvec;
    for (int k = 0; k <= n; ++k) hvec.push_back(h.coeff(k));
    Polynomial via_table = apply_h(coeff_table(D, n), hvec);
    if (via_f != via_table)
        throw std::logic_error("subdivide_h_polynomial: route disagreement: " + via_f.str() +
                               " vs " + via_table.str());
    return via_f;
}

/**
 * Power-series identity for the barycentric column: for every m >= 0 the
 * value sum_i h_i m^i (m + 1)^(n-i) must equal the x^m coefficient of
 * (subdivided h-polynomial) / (1 - x)^(n+1).  Checked for m = 0..terms.
 */
inline bool sd_power_series_check(const std::vector<Rational>& hvec, int n, int terms) {
    if (static_cast<int>(hvec.size()) > n + 1)
        throw std::invalid_argument("sd_power_series_check: h-vector longer than n + 1");
    Polynomial subdivided = apply_h(barycentric_triangle(n), hvec, n);
    for (long m = 0; m <= terms; ++m) {
        Rational lhs = 0;
        for (size_t i = 0; i < hvec.size(); ++i)
            lhs += hvec[i] * Rational(int_pow(Int(m), static_cast<long>(i)) *
                                      int_pow(Int(m + 1), n - static_cast<long>(i)));
        Rational rhs = 0;
        for (int i = 0; i <= std::min<long>(m, subdivided.degree()); ++i)
            rhs += subdivided.coeff(i) * Rational(binomial(m - i + n, n));
        if (lhs != rhs) return false;
    }
    return true;
}

inline std::string coeff_table_csv(const CoeffTable& table) {
    std::ostringstream out;
    out << "n,k,j,p\n";
    for (int k = 0; k <= table.n; ++k)
        for (int j = 0; j <= table.n; ++j)
            out << table.n << "," << k << "," << j << ","
                << to_string(table.polys[static_cast<size_t>(k)].coeff(j)) << "\n";
    return out.str();
}

}  // namespace unitri
