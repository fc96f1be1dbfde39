#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace anticode {

/// Exact arbitrary-precision integer for set sizes and bound slack.
using Bigint = boost::multiprecision::cpp_int;

/// binom(n, k); zero outside 0 <= k <= n.
inline Bigint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binom(n-k+i, i) after this step
    }
    return r;
}

/// base^exp with exp >= 0.
inline Bigint ipow(const Bigint& base, std::uint64_t exp) {
    Bigint r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace anticode
