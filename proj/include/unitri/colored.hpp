#pragma once

#include "unitri/combinatorics.hpp"
#include "unitri/parallel.hpp"
#include "unitri/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitri {

/// Default ceiling on brute-force permutation enumeration.
inline constexpr std::uint64_t kDefaultMaxPerms = 10'000'000;

/// Thrown when a requested enumeration would exceed its cap; callers treat
/// this as "oracle unavailable", not as a wrong answer.
struct enumeration_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * A colored permutation: letters tau (a permutation of 1..n in one-line
 * notation) with colors[i] the color, in 0..r-1, carried by tau[i].
 */
struct ColoredPermutation {
    std::vector<int> tau;
    std::vector<int> colors;
};

/**
 * Descent count.  Position i (1-based, i <= n) is a descent when the color
 * strictly drops there, or the colors tie and the letters strictly drop.
 * Comparisons at position n are against a padding letter n+1 of color zero,
 * so position n is a descent exactly when its color is nonzero.
 */
inline int descent_count(const ColoredPermutation& w) {
    const int n = static_cast<int>(w.tau.size());
    if (w.colors.size() != w.tau.size())
        throw std::invalid_argument("descent_count: letter/color length mismatch");
    int des = 0;
    for (int i = 0; i < n; ++i) {
        int next_letter = i + 1 < n ? w.tau[i + 1] : n + 1;
        int next_color = i + 1 < n ? w.colors[i + 1] : 0;
        if (w.colors[i] > next_color || (w.colors[i] == next_color && w.tau[i] > next_letter))
            ++des;
    }
    return des;
}

namespace detail {

inline Polynomial poly_from_counts(const std::vector<Int>& counts) {
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const Int& c : counts) coeffs.emplace_back(c);
    return Polynomial(coeffs);
}

inline void require_cap(const Int& work, std::uint64_t max_perms, const char* what) {
    if (work > Int(max_perms))
        throw enumeration_cap_error(std::string(what) + ": enumeration of " + work.str() +
                                    " objects exceeds cap of " + std::to_string(max_perms));
}

inline Polynomial eulerian_by_enumeration(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> counts(static_cast<size_t>(std::max(n, 1)), 0);
    do {
        int des = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(i) + 1]) ++des;
        ++counts[static_cast<size_t>(des)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return poly_from_counts(counts);
}

}  // namespace detail

/**
 * The n-th Eulerian polynomial: descents summed over the symmetric group.
 * Direct enumeration through n = 9 (cached), then the classical recurrence
 * A_{m+1} = (1 + m x) A_m + x (1 - x) A_m'.
 */
inline Polynomial eulerian(int n) {
    if (n < 0) throw std::invalid_argument("eulerian: negative index");
    constexpr int kEnumerated = 9;
    static const std::vector<Polynomial> base = [] {
        std::vector<Polynomial> table;
        for (int m = 0; m <= kEnumerated; ++m)
            table.push_back(detail::eulerian_by_enumeration(m));
        return table;
    }();
    if (n <= kEnumerated) return base[static_cast<size_t>(n)];
    Polynomial a = base.back();
    const Polynomial x_minus_x2({0, 1, -1});
    for (int m = kEnumerated; m < n; ++m)
        a = Polynomial({1, m}) * a + x_minus_x2 * a.derivative();
    return a;
}

/**
 * Descent generating polynomial over the colored permutations of 1..n whose
 * first coordinate has color zero.  r = 1 reduces to eulerian(n).
 */
inline Polynomial colored_descent_poly(int n, int r,
                                       std::uint64_t max_perms = kDefaultMaxPerms) {
    if (n < 1 || r < 1)
        throw std::invalid_argument("colored_descent_poly: need n >= 1 and r >= 1");
    detail::require_cap(factorial(n) * int_pow(Int(r), n - 1), max_perms,
                        "colored_descent_poly");
    std::vector<Int> counts(static_cast<size_t>(n) + 1, 0);
    ColoredPermutation w;
    w.tau.resize(static_cast<size_t>(n));
    std::iota(w.tau.begin(), w.tau.end(), 1);
    w.colors.assign(static_cast<size_t>(n), 0);
    do {
        // odometer over the free colors (positions 2..n); it finishes reset
        while (true) {
            ++counts[static_cast<size_t>(descent_count(w))];
            int p = 1;
            while (p < n && w.colors[static_cast<size_t>(p)] == r - 1)
                w.colors[static_cast<size_t>(p++)] = 0;
            if (p >= n) break;
            ++w.colors[static_cast<size_t>(p)];
        }
    } while (std::next_permutation(w.tau.begin(), w.tau.end()));
    return detail::poly_from_counts(counts);
}

/**
 * Ascent generating polynomial of words of length n over the alphabet
 * 0..r-1, an ascent being a strict rise w_i < w_{i+1} read with a leading
 * zero in front of the word.
 */
inline Polynomial word_ascent_poly(int n, int r, std::uint64_t max_perms = kDefaultMaxPerms) {
    if (n < 1 || r < 1)
        throw std::invalid_argument("word_ascent_poly: need n >= 1 and r >= 1");
    detail::require_cap(int_pow(Int(r), n), max_perms, "word_ascent_poly");
    std::vector<Int> counts(static_cast<size_t>(n) + 1, 0);
    std::vector<int> word(static_cast<size_t>(n), 0);
    while (true) {
        int asc = 0, prev = 0;
        for (int v : word) {
            if (prev < v) ++asc;
            prev = v;
        }
        ++counts[static_cast<size_t>(asc)];
        int p = 0;
        while (p < n && word[static_cast<size_t>(p)] == r - 1)
            word[static_cast<size_t>(p++)] = 0;
        if (p >= n) break;
        ++word[static_cast<size_t>(p)];
    }
    return detail::poly_from_counts(counts);
}

/**
 * Joint descent statistics of colored permutations of 1..n+1 whose first and
 * last coordinates have color zero, refined by the last letter.  Entry [k][j]
 * counts those with last letter n+1-k and j descents.  Enumeration is split
 * across workers by the first letter.
 */
inline std::vector<std::vector<Int>> colored_descent_table(
    int n, int r, std::uint64_t max_perms = kDefaultMaxPerms) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("colored_descent_table: need n >= 0 and r >= 1");
    detail::require_cap(factorial(n + 1) * int_pow(Int(r), n), max_perms,
                        "colored_descent_table");
    const int N = n + 1;
    const size_t dim = static_cast<size_t>(N);
    std::vector<std::vector<std::vector<Int>>> partial(
        dim, std::vector<std::vector<Int>>(dim, std::vector<Int>(dim, Int(0))));
    parallel_for(dim, [&](size_t first_idx) {
        auto& local = partial[first_idx];
        std::vector<int> tail;
        for (int v = 1; v <= N; ++v)
            if (v != static_cast<int>(first_idx) + 1) tail.push_back(v);
        ColoredPermutation w;
        w.tau.resize(dim);
        w.tau[0] = static_cast<int>(first_idx) + 1;
        w.colors.assign(dim, 0);
        do {
            std::copy(tail.begin(), tail.end(), w.tau.begin() + 1);
            const size_t k = dim - static_cast<size_t>(w.tau[dim - 1]);
            // odometer over the free colors (positions 2..N-1); ends reset
            while (true) {
                ++local[k][static_cast<size_t>(descent_count(w))];
                int p = 1;
                while (p + 1 < N && w.colors[static_cast<size_t>(p)] == r - 1)
                    w.colors[static_cast<size_t>(p++)] = 0;
                if (p + 1 >= N) break;
                ++w.colors[static_cast<size_t>(p)];
            }
        } while (std::next_permutation(tail.begin(), tail.end()));
    });
    std::vector<std::vector<Int>> table(dim, std::vector<Int>(dim, Int(0)));
    for (const auto& local : partial)
        for (size_t k = 0; k < dim; ++k)
            for (size_t j = 0; j < dim; ++j) table[k][j] += local[k][j];
    return table;
}

inline Int colored_descent_count(int n, int k, int j, int r,
                                 std::uint64_t max_perms = kDefaultMaxPerms) {
    if (k < 0 || k > n || j < 0 || j > n)
        throw std::invalid_argument("colored_descent_count: indices out of range");
    return colored_descent_table(n, r, max_perms)[static_cast<size_t>(k)][static_cast<size_t>(j)];
}

}  // namespace unitri
