#pragma once

#include "unitri/ftriangle.hpp"
#include "unitri/parallel.hpp"
#include "unitri/polynomial.hpp"
#include "unitri/transform.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitri {

/**
 * Exact real-root machinery: Sturm chains over the rationals, Yun squarefree
 * decomposition, bisection isolation with arbitrary-precision interval
 * endpoints.  No floating point anywhere.
 */
class SturmChain {
  public:
    explicit SturmChain(const Polynomial& squarefree) {
        seq_.push_back(squarefree);
        if (squarefree.degree() >= 1) seq_.push_back(squarefree.derivative());
        while (seq_.back().degree() >= 1) {
            Polynomial rem = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
            if (rem.is_zero()) break;
            rem = -rem;
            // scaling by a positive constant preserves all sign sequences
            Rational lead = rational_abs(rem.leading());
            seq_.push_back((Rational(1) / lead) * rem);
        }
    }

    int variations_at(const Rational& x) const {
        int count = 0, prev = 0;
        for (const Polynomial& p : seq_) {
            int s = sign_of(p.evaluate(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int variations_at_pos_inf() const {
        int count = 0, prev = 0;
        for (const Polynomial& p : seq_) {
            int s = sign_of(p.leading());
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int variations_at_neg_inf() const {
        int count = 0, prev = 0;
        for (const Polynomial& p : seq_) {
            int s = sign_of(p.leading());
            if (p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

    const Polynomial& poly() const { return seq_.front(); }

  private:
    std::vector<Polynomial> seq_;
};

/// Squarefree decomposition by Yun's algorithm: pairwise-coprime squarefree
/// factors with their multiplicities.  Constant polynomials yield no factors.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> factors;
    if (p.degree() <= 0) return factors;
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        factors.push_back({(Rational(1) / p.leading()) * p, 1});
        return factors;
    }
    Polynomial w = poly_divexact(p, g);
    Polynomial y = poly_divexact(p.derivative(), g);
    Polynomial z = y - w.derivative();
    int multiplicity = 1;
    while (w.degree() >= 1) {
        Polynomial f = poly_gcd(w, z);
        if (f.degree() >= 1) factors.push_back({f, multiplicity});
        Polynomial f_or_one = f.degree() >= 1 ? f : Polynomial::constant(Rational(1));
        w = poly_divexact(w, f_or_one);
        y = poly_divexact(z, f_or_one);
        z = y - w.derivative();
        ++multiplicity;
    }
    return factors;
}

/**
 * A half-open isolating interval (lo, hi] for a single root, or an exact
 * rational root when lo == hi.  Multiplicity refers to the original
 * polynomial the certificate was produced for.
 */
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }

    std::string str() const {
        if (exact()) return "{" + to_string(lo) + "}";
        return "(" + to_string(lo) + ", " + to_string(hi) + "]";
    }
};

inline bool intervals_disjoint(const RootInterval& a, const RootInterval& b) {
    if (a.exact() && b.exact()) return a.lo != b.lo;
    if (a.exact()) return a.lo <= b.lo || a.lo > b.hi;  // point in (lo, hi]?
    if (b.exact()) return b.lo <= a.lo || b.lo > a.hi;
    return a.hi <= b.lo || b.hi <= a.lo;
}

/// Power of two strictly above every real root (Cauchy bound).
inline Rational root_bound_pow2(const Polynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational max_ratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational ratio = rational_abs(p.coeff(i)) / rational_abs(p.leading());
        if (ratio > max_ratio) max_ratio = ratio;
    }
    Rational bound = 1 + max_ratio;
    Rational b = 1;
    while (b < bound) b *= 2;
    return b * 2;
}

/// Shrinks an isolating interval of a squarefree polynomial below `width`;
/// rational roots hit by a bisection midpoint collapse to exact points.
inline RootInterval refine_interval(const SturmChain& chain, RootInterval iv, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refine_interval: width must be positive");
    while (!iv.exact() && iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (chain.poly().evaluate(mid) == 0) {
            iv.lo = mid;
            iv.hi = mid;
            return iv;
        }
        if (chain.count_in(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

/**
 * Isolating intervals for all real roots of a squarefree polynomial, in
 * increasing order.  Each interval is refined to width at most 1/2 so that
 * integer and half-integer roots snap to exact points.
 */
inline std::vector<RootInterval> isolate_real_roots(const Polynomial& squarefree) {
    std::vector<RootInterval> roots;
    if (squarefree.degree() < 1) return roots;
    SturmChain chain(squarefree);
    Rational B = root_bound_pow2(squarefree);
    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::vector<Segment> stack;
    int total = chain.count_in(-B, B);
    if (total > 0) stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.count == 1) {
            RootInterval iv{seg.lo, seg.hi, 1};
            if (chain.poly().evaluate(seg.hi) == 0) {
                iv.lo = iv.hi = seg.hi;
            } else {
                iv = refine_interval(chain, iv, Rational(1, 2));
            }
            roots.push_back(iv);
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / 2;
        int left = chain.count_in(seg.lo, mid);
        int right = seg.count - left;
        // right segment first so the stack pops in increasing order
        if (right > 0) stack.push_back({mid, seg.hi, right});
        if (left > 0) stack.push_back({seg.lo, mid, left});
    }
    return roots;
}

enum class RootVerdict { RealRooted, NotRealRooted, ZeroPolynomial };

inline const char* to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::RealRooted: return "real-rooted";
        case RootVerdict::NotRealRooted: return "not-real-rooted";
        case RootVerdict::ZeroPolynomial: return "zero-polynomial";
    }
    return "?";
}

/**
 * Evidence for the real-rootedness decision: pairwise disjoint isolating
 * intervals with multiplicities summing to the degree when real-rooted, or a
 * witness squarefree factor with fewer real roots than its degree otherwise.
 * The zero polynomial counts as real-rooted by convention.
 */
struct RootCertificate {
    RootVerdict verdict = RootVerdict::ZeroPolynomial;
    std::vector<RootInterval> intervals;
    std::optional<Polynomial> witness;
    int real_roots = 0;  // distinct real roots of the squarefree part
};

namespace detail {

/// Refines members of `intervals` (whose roots are pairwise distinct) until
/// pairwise disjoint; chains[i] drives interval i.
inline void refine_until_disjoint(std::vector<RootInterval>& intervals,
                                  const std::vector<const SturmChain*>& chains) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < intervals.size(); ++i)
            for (size_t j = i + 1; j < intervals.size(); ++j) {
                if (intervals_disjoint(intervals[i], intervals[j])) continue;
                if (intervals[i].exact() && intervals[j].exact())
                    throw std::logic_error("refine_until_disjoint: coincident exact roots");
                if (!intervals[i].exact())
                    intervals[i] = refine_interval(*chains[i], intervals[i],
                                                   (intervals[i].hi - intervals[i].lo) / 2);
                if (!intervals[j].exact())
                    intervals[j] = refine_interval(*chains[j], intervals[j],
                                                   (intervals[j].hi - intervals[j].lo) / 2);
                changed = true;
            }
    }
}

}  // namespace detail

inline RootCertificate certify_real_rooted(const Polynomial& p) {
    RootCertificate cert;
    if (p.is_zero()) {
        cert.verdict = RootVerdict::ZeroPolynomial;
        return cert;
    }
    if (p.degree() == 0) {
        cert.verdict = RootVerdict::RealRooted;
        return cert;
    }
    auto factors = squarefree_decomposition(p);
    std::vector<SturmChain> chains;
    chains.reserve(factors.size());
    for (const auto& [f, mult] : factors) chains.emplace_back(f);
    cert.verdict = RootVerdict::RealRooted;
    std::vector<const SturmChain*> chain_ptrs;
    for (size_t i = 0; i < factors.size(); ++i) {
        std::vector<RootInterval> roots = isolate_real_roots(factors[i].first);
        cert.real_roots += static_cast<int>(roots.size());
        if (static_cast<int>(roots.size()) != factors[i].first.degree()) {
            cert.verdict = RootVerdict::NotRealRooted;
            if (!cert.witness) cert.witness = factors[i].first;
        }
        for (RootInterval iv : roots) {
            iv.multiplicity = factors[i].second;
            cert.intervals.push_back(iv);
            chain_ptrs.push_back(&chains[i]);
        }
    }
    detail::refine_until_disjoint(cert.intervals, chain_ptrs);
    // sort jointly with the chains by interval position
    std::vector<size_t> order(cert.intervals.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return cert.intervals[a].hi < cert.intervals[b].hi ||
               (cert.intervals[a].hi == cert.intervals[b].hi &&
                cert.intervals[a].lo < cert.intervals[b].lo);
    });
    std::vector<RootInterval> sorted;
    sorted.reserve(order.size());
    for (size_t i : order) sorted.push_back(cert.intervals[i]);
    cert.intervals = std::move(sorted);
    return cert;
}

inline bool is_real_rooted(const Polynomial& p) {
    return certify_real_rooted(p).verdict != RootVerdict::NotRealRooted;
}

/// Disjoint isolating intervals, with multiplicities, for all distinct real
/// roots of a nonzero polynomial, in increasing order.
inline std::vector<RootInterval> isolate_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    return certify_real_rooted(p).intervals;
}

namespace detail {

/// A real algebraic number: the unique root of `poly` inside `iv`.
struct AlgebraicNumber {
    const Polynomial* poly;
    const SturmChain* chain;
    RootInterval iv;
};

/// Exact three-way comparison; refines the stored intervals as needed.
inline int compare(AlgebraicNumber& x, AlgebraicNumber& y) {
    auto as_points = [&]() -> std::optional<int> {
        if (x.iv.exact() && y.iv.exact())
            return x.iv.lo < y.iv.lo ? -1 : (x.iv.lo == y.iv.lo ? 0 : 1);
        return std::nullopt;
    };
    if (auto r = as_points()) return *r;
    // equality is only possible at a common root of both polynomials lying in
    // both isolating intervals (where it is forced to be the isolated root)
    auto equal_numbers = [&]() -> bool {
        if (x.poly == y.poly) return false;  // distinct roots of one squarefree polynomial
        Polynomial g = poly_gcd(*x.poly, *y.poly);
        if (g.degree() < 1) return false;
        Rational lo = std::max(x.iv.lo, y.iv.lo);
        Rational hi = std::min(x.iv.hi, y.iv.hi);
        if (lo > hi) return false;
        if (x.iv.exact() || y.iv.exact()) {
            Rational point = x.iv.exact() ? x.iv.lo : y.iv.lo;
            const RootInterval& other = x.iv.exact() ? y.iv : x.iv;
            return g.evaluate(point) == 0 && point > other.lo && point <= other.hi;
        }
        return SturmChain(g).count_in(lo, hi) > 0;
    };
    if (equal_numbers()) return 0;
    // distinct numbers: refine until the intervals separate
    while (true) {
        if (x.iv.exact() && y.iv.exact()) return x.iv.lo < y.iv.lo ? -1 : 1;
        if (x.iv.exact()) {
            if (x.iv.lo <= y.iv.lo) return -1;
            if (x.iv.lo > y.iv.hi) return 1;
        } else if (y.iv.exact()) {
            if (y.iv.lo <= x.iv.lo) return 1;
            if (y.iv.lo > x.iv.hi) return -1;
        } else {
            if (x.iv.hi <= y.iv.lo) return -1;
            if (y.iv.hi <= x.iv.lo) return 1;
        }
        if (!x.iv.exact()) x.iv = refine_interval(*x.chain, x.iv, (x.iv.hi - x.iv.lo) / 2);
        if (!y.iv.exact()) y.iv = refine_interval(*y.chain, y.iv, (y.iv.hi - y.iv.lo) / 2);
    }
}

/**
 * All real roots of a real-rooted polynomial as algebraic numbers repeated by
 * multiplicity, in increasing order.  `storage` keeps the squarefree factors
 * and chains alive.
 */
struct RootList {
    std::vector<std::pair<Polynomial, int>> factors;
    std::vector<std::unique_ptr<SturmChain>> chains;
    std::vector<AlgebraicNumber> roots;  // with multiplicity, ascending
};

inline RootList list_roots(const Polynomial& p) {
    RootList list;
    list.factors = squarefree_decomposition(p);
    std::vector<AlgebraicNumber> distinct;
    for (size_t i = 0; i < list.factors.size(); ++i) {
        list.chains.push_back(std::make_unique<SturmChain>(list.factors[i].first));
        for (const RootInterval& iv : isolate_real_roots(list.factors[i].first)) {
            AlgebraicNumber num{&list.factors[i].first, list.chains[i].get(), iv};
            num.iv.multiplicity = list.factors[i].second;
            distinct.push_back(num);
        }
    }
    // Yun factors are pairwise coprime, so all these roots are distinct and
    // the intervals can be separated, then ordered by position alone.
    std::vector<RootInterval> ivs;
    std::vector<const SturmChain*> chains;
    for (const AlgebraicNumber& num : distinct) {
        ivs.push_back(num.iv);
        chains.push_back(num.chain);
    }
    refine_until_disjoint(ivs, chains);
    for (size_t i = 0; i < distinct.size(); ++i) distinct[i].iv = ivs[i];
    std::sort(distinct.begin(), distinct.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                  return a.iv.hi < b.iv.hi || (a.iv.hi == b.iv.hi && a.iv.lo < b.iv.lo);
              });
    for (const AlgebraicNumber& num : distinct)
        for (int c = 0; c < num.iv.multiplicity; ++c) list.roots.push_back(num);
    return list;
}

}  // namespace detail

struct AlignmentEntry {
    char source = 'f';  // 'f' or 'g'
    RootInterval interval;
};

/**
 * Outcome of the interlacing test together with the merged root alignment
 * (ascending) that witnesses the verdict.
 */
struct InterlacingVerdict {
    bool result = false;
    std::string reason;
    std::vector<AlignmentEntry> alignment;
};

/**
 * Does f interlace g?  Root multisets a (of f) and b (of g), ascending, must
 * satisfy the alternation b_1 <= a_1 <= b_2 <= a_2 <= ... when deg g =
 * deg f + 1, or a_1 <= b_1 <= a_2 <= b_2 <= ... when degrees are equal.
 * Conventions: the zero polynomial interlaces and is interlaced by
 * everything; nonzero constants interlace exactly the polynomials of degree
 * at most one.
 */
inline InterlacingVerdict interlaces(const Polynomial& f, const Polynomial& g) {
    InterlacingVerdict verdict;
    if (f.is_zero() || g.is_zero()) {
        verdict.result = true;
        verdict.reason = "zero polynomial convention";
        return verdict;
    }
    if (f.degree() == 0) {
        verdict.result = g.degree() <= 1;
        verdict.reason = verdict.result ? "constant interlaces degree <= 1"
                                        : "constant cannot interlace degree >= 2";
        return verdict;
    }
    if (g.degree() != f.degree() && g.degree() != f.degree() + 1) {
        verdict.reason = "degree mismatch: deg f = " + std::to_string(f.degree()) +
                         ", deg g = " + std::to_string(g.degree());
        return verdict;
    }
    if (!is_real_rooted(f)) {
        verdict.reason = "f is not real-rooted";
        return verdict;
    }
    if (!is_real_rooted(g)) {
        verdict.reason = "g is not real-rooted";
        return verdict;
    }
    detail::RootList fr = detail::list_roots(f);
    detail::RootList gr = detail::list_roots(g);
    const size_t p = fr.roots.size(), q = gr.roots.size();
    auto cmp_le = [](detail::AlgebraicNumber& a, detail::AlgebraicNumber& b) {
        return detail::compare(a, b) <= 0;
    };
    bool ok = true;
    if (q == p + 1) {
        // b_i <= a_i <= b_(i+1)
        for (size_t i = 0; i < p && ok; ++i)
            ok = cmp_le(gr.roots[i], fr.roots[i]) && cmp_le(fr.roots[i], gr.roots[i + 1]);
    } else {
        // a_i <= b_i <= a_(i+1)
        for (size_t i = 0; i < p && ok; ++i) {
            ok = cmp_le(fr.roots[i], gr.roots[i]);
            if (ok && i + 1 < p) ok = cmp_le(gr.roots[i], fr.roots[i + 1]);
        }
    }
    verdict.result = ok;
    verdict.reason = ok ? "roots alternate" : "root alternation fails";
    // merged alignment, ascending
    size_t i = 0, j = 0;
    while (i < p || j < q) {
        bool take_f = j >= q || (i < p && detail::compare(fr.roots[i], gr.roots[j]) <= 0);
        if (take_f) {
            verdict.alignment.push_back({'f', fr.roots[i].iv});
            ++i;
        } else {
            verdict.alignment.push_back({'g', gr.roots[j].iv});
            ++j;
        }
    }
    return verdict;
}

/**
 * Is (g_0, ..., g_m) an interlacing sequence, i.e. does g_i interlace g_j for
 * all i < j?  With all_pairs = false only consecutive pairs and (g_0, g_m)
 * are tested, which is the usual sufficient reduction for nonnegative
 * real-rooted sequences.
 */
inline bool interlacing_sequence(const std::vector<Polynomial>& polys, bool all_pairs = true) {
    if (polys.size() <= 1) return true;
    if (all_pairs) {
        for (size_t i = 0; i < polys.size(); ++i)
            for (size_t j = i + 1; j < polys.size(); ++j)
                if (!interlaces(polys[i], polys[j]).result) return false;
        return true;
    }
    for (size_t i = 0; i + 1 < polys.size(); ++i)
        if (!interlaces(polys[i], polys[i + 1]).result) return false;
    return interlaces(polys.front(), polys.back()).result;
}

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool ok() const {
        for (const auto& item : items)
            if (!item.ok) return false;
        return true;
    }
    std::string str() const {
        std::ostringstream out;
        for (const auto& item : items)
            out << (item.ok ? "  ok   " : "  FAIL ") << item.name
                << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
        return out.str();
    }
};

/**
 * Hypotheses of the real-rootedness transfer theorem at level n:
 *  (i)  h rows of the triangle are real-rooted for 2 <= m < n;
 *  (ii) for 2 <= m <= n the difference h[m] - boundary_h(m) is zero or has
 *       nonnegative coefficients, degree m - 1, is real-rooted, and is
 *       interlaced by h[m-1].
 */
inline CheckReport check_assumptions(const DerivedTriangles& D, int n) {
    if (n < 1 || n > D.d) throw std::invalid_argument("check_assumptions: level out of range");
    CheckReport report;
    for (int m = 2; m < n; ++m) {
        const Polynomial& h = D.h[static_cast<size_t>(m)];
        bool ok = is_real_rooted(h);
        report.items.push_back({"(i) h row " + std::to_string(m) + " real-rooted", ok,
                                ok ? "" : h.str()});
    }
    for (int m = 2; m <= n; ++m) {
        Polynomial diff = D.h[static_cast<size_t>(m)] - boundary_h_direct(D, m);
        std::string name = "(ii) interior excess at m = " + std::to_string(m);
        if (diff.is_zero()) {
            report.items.push_back({name, true, "zero"});
            continue;
        }
        bool ok = true;
        std::string why;
        if (!diff.has_nonnegative_coeffs()) {
            ok = false;
            why = "negative coefficients in " + diff.str();
        } else if (diff.degree() != m - 1) {
            ok = false;
            why = "degree " + std::to_string(diff.degree()) + " != m - 1";
        } else if (!is_real_rooted(diff)) {
            ok = false;
            why = "not real-rooted: " + diff.str();
        } else if (!interlaces(D.h[static_cast<size_t>(m - 1)], diff).result) {
            ok = false;
            why = "not interlaced by h row " + std::to_string(m - 1);
        }
        report.items.push_back({name, ok, why});
    }
    return report;
}

inline CheckReport check_assumptions(const FTriangle& F, int n) {
    return check_assumptions(derive(F), n);
}

/// Nonnegative real-rooted symmetric decomposition of g with respect to n.
inline CheckReport certify_symmetric_decomposition(const Polynomial& g, int n) {
    CheckReport report;
    SymmetricDecomposition dec = symmetric_decompose(g, n);
    bool a_nonneg = dec.a.has_nonnegative_coeffs();
    bool b_nonneg = dec.b.has_nonnegative_coeffs();
    report.items.push_back({"symmetric part nonnegative", a_nonneg, dec.a.str()});
    report.items.push_back({"complementary part nonnegative", b_nonneg, dec.b.str()});
    bool a_rr = is_real_rooted(dec.a);
    bool b_rr = is_real_rooted(dec.b);
    report.items.push_back({"symmetric part real-rooted", a_rr, a_rr ? "" : dec.a.str()});
    report.items.push_back({"complementary part real-rooted", b_rr, b_rr ? "" : dec.b.str()});
    return report;
}

/**
 * Conclusions of the transfer theorem at level n for a triangle satisfying the
 * hypotheses:
 *  (a) the h-level operator preserves real-rootedness on nonnegative inputs
 *      (spot-checked on deterministic corner cases and `samples` random
 *      h-vectors drawn from the given seed);
 *  (b) h[n] and boundary_h(n) are real-rooted and interlaced by h[n-1];
 *  (c) h[n] has a nonnegative real-rooted symmetric decomposition wrt n - 1.
 */
inline CheckReport check_conclusions(const FTriangle& F, int n, int samples, uint64_t seed) {
    DerivedTriangles D = derive(F);
    if (n < 1 || n > D.d) throw std::invalid_argument("check_conclusions: level out of range");
    CheckReport report;
    CoeffTable table = coeff_table(D, n);

    std::vector<std::vector<Rational>> inputs;
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
        e[static_cast<size_t>(k)] = 1;
        inputs.push_back(std::move(e));
    }
    inputs.push_back(std::vector<Rational>(static_cast<size_t>(n) + 1, Rational(1)));
    {
        std::vector<Rational> sparse(static_cast<size_t>(n) + 1, Rational(0));
        sparse[0] = 1;
        sparse[static_cast<size_t>(n)] = 1;
        inputs.push_back(sparse);
        std::vector<Rational> spread(static_cast<size_t>(n) + 1, Rational(0));
        spread[0] = 1;
        spread[static_cast<size_t>(n) / 2] = 1'000'000;
        spread[static_cast<size_t>(n)] = 1;
        inputs.push_back(spread);
        std::vector<Rational> tent(static_cast<size_t>(n) + 1, Rational(0));
        for (int k = 0; k <= n; ++k) tent[static_cast<size_t>(k)] = 1 + std::min(k, n - k);
        inputs.push_back(tent);
    }
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(s + 1));
        std::uniform_int_distribution<int> dist(0, 1000);
        std::vector<Rational> h(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) h[static_cast<size_t>(k)] = dist(rng);
        inputs.push_back(std::move(h));
    }
    std::vector<char> sample_ok(inputs.size(), 0);
    std::vector<std::string> sample_witness(inputs.size());
    parallel_for(inputs.size(), [&](size_t i) {
        Polynomial image = apply_h(table, inputs[i]);
        if (is_real_rooted(image)) {
            sample_ok[i] = 1;
        } else {
            std::ostringstream out;
            out << "input (";
            for (size_t k = 0; k < inputs[i].size(); ++k)
                out << (k ? "," : "") << to_string(inputs[i][k]);
            out << ") maps to " << image.str();
            sample_witness[i] = out.str();
        }
    });
    bool all_ok = true;
    std::string first_witness;
    for (size_t i = 0; i < inputs.size(); ++i)
        if (!sample_ok[i]) {
            all_ok = false;
            first_witness = sample_witness[i];
            break;
        }
    report.items.push_back({"(a) operator preserves real-rootedness on " +
                                std::to_string(inputs.size()) + " nonnegative inputs",
                            all_ok, all_ok ? "no counterexample found" : first_witness});

    const Polynomial& h_n = D.h[static_cast<size_t>(n)];
    Polynomial h_boundary = boundary_h_direct(D, n);
    const Polynomial& h_prev = D.h[static_cast<size_t>(n - 1)];
    bool b1 = is_real_rooted(h_n);
    bool b2 = is_real_rooted(h_boundary);
    bool b3 = interlaces(h_prev, h_n).result;
    bool b4 = interlaces(h_prev, h_boundary).result;
    report.items.push_back({"(b) h row " + std::to_string(n) + " real-rooted", b1, h_n.str()});
    report.items.push_back(
        {"(b) boundary h at " + std::to_string(n) + " real-rooted", b2, h_boundary.str()});
    report.items.push_back({"(b) h row " + std::to_string(n) + " interlaced by previous row", b3, ""});
    report.items.push_back({"(b) boundary h interlaced by previous row", b4, ""});

    CheckReport dec = certify_symmetric_decomposition(h_n, n - 1);
    for (CheckItem item : dec.items) {
        item.name = "(c) " + item.name;
        report.items.push_back(std::move(item));
    }
    return report;
}

/**
 * Ball criterion for the barycentric column: an h-vector with h_n = 0 leads,
 * after subdivision, to a nonnegative real-rooted symmetric decomposition wrt
 * n - 1.  The top entry and the partial-sum preconditions are reported, not
 * assumed.
 */
inline CheckReport ball_sd_check(const std::vector<Rational>& hvec, int n) {
    if (static_cast<int>(hvec.size()) > n + 1)
        throw std::invalid_argument("ball_sd_check: h-vector longer than n + 1");
    CheckReport report;
    Rational top = static_cast<int>(hvec.size()) == n + 1 ? hvec[static_cast<size_t>(n)] : Rational(0);
    report.items.push_back({"h_n vanishes (ball input)", top == 0, to_string(top)});
    for (int j = 0; 2 * j <= n; ++j) {
        Rational lhs = 0, rhs = 0;
        for (int i = 0; i <= j; ++i) {
            int lo_idx = n - i;
            if (lo_idx < static_cast<int>(hvec.size())) lhs += hvec[static_cast<size_t>(lo_idx)];
            if (i < static_cast<int>(hvec.size())) rhs += hvec[static_cast<size_t>(i)];
        }
        report.items.push_back({"partial sums through " + std::to_string(j), lhs <= rhs,
                                to_string(lhs) + " <= " + to_string(rhs)});
    }
    Polynomial subdivided = apply_h(barycentric_triangle(n), hvec, n);
    if (subdivided.degree() > n - 1) {
        report.items.push_back({"subdivided polynomial fits decomposition window " +
                                    std::to_string(n - 1),
                                false, subdivided.str()});
        return report;
    }
    CheckReport dec = certify_symmetric_decomposition(subdivided, n - 1);
    for (CheckItem item : dec.items) report.items.push_back(std::move(item));
    return report;
}

}  // namespace unitri
