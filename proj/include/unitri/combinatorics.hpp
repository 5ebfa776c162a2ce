#pragma once

#include "unitri/rational.hpp"

#include <vector>

namespace unitri {

/// C(n, k) with the usual convention: zero whenever k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Int factorial(long n) {
    Int result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Stirling numbers of the second kind, S(n, k).
inline Int stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<Int> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min<long>(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j)] * j + row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

inline Int int_pow(const Int& base, long exp) {
    Int result = 1;
    for (long i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace unitri
