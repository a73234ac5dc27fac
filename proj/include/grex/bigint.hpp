#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grex {

/// Exact arbitrary-precision integer used for multiplicities, dimensions and
/// polynomial coefficients.
using Int = boost::multiprecision::cpp_int;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace grex
