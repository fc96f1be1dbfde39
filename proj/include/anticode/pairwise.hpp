#pragma once

#include "anticode/codeset.hpp"

#include <cstdint>
#include <limits>

namespace anticode::pairwise {

/// Pairwise statistic evaluated on two rows of a CodeSet.
enum class Stat { distance, agreement };

inline int eval(Stat s, const Symbol* a, const Symbol* b, int n) {
    int acc = 0;
    if (s == Stat::distance) {
        for (int i = 0; i < n; ++i) acc += a[i] != b[i];
    } else {
        for (int i = 0; i < n; ++i) acc += (a[i] != 0) & (a[i] == b[i]);
    }
    return acc;
}

/// Extreme of a statistic over all unordered row pairs (i < j), plus the
/// lexicographically first pair attaining it. `found` is false only for
/// sets with fewer than two rows.
struct ScanResult {
    int extreme = 0;
    std::size_t i = 0, j = 0;
    bool found = false;
};

/// First pair violating a threshold, scanning pairs in lexicographic order.
/// When no violation exists the full extreme (min for `first_below`, max for
/// `first_above`) is reported; a violating scan stops early, so the extreme
/// is then meaningless and `extreme_valid` is false.
struct ViolationResult {
    bool found = false;
    std::size_t i = 0, j = 0;
    int value = 0;
    int extreme = 0;
    bool extreme_valid = false;
};

inline constexpr int kNoBound = std::numeric_limits<int>::max();

/// Parallel (OpenMP) kernels. `stop_at` is a caller-proven bound on the
/// statistic (upper bound for max, lower bound for min); reaching it lets
/// rows terminate early without affecting the result or the witness.
/// Pass kNoBound / -kNoBound to disable. `workers` <= 0 uses the OpenMP
/// default. All results, including witnesses, are independent of the
/// worker count.
ScanResult max_scan(const CodeSet& c, Stat stat, int stop_at, int workers);
ScanResult min_scan(const CodeSet& c, Stat stat, int stop_at, int workers);
ViolationResult first_below(const CodeSet& c, Stat stat, int threshold, int workers);
ViolationResult first_above(const CodeSet& c, Stat stat, int threshold, int workers);

/// Serial reference implementations with identical contracts; the parallel
/// kernels are tested and benchmarked against these.
namespace serial {
ScanResult max_scan(const CodeSet& c, Stat stat, int stop_at);
ScanResult min_scan(const CodeSet& c, Stat stat, int stop_at);
ViolationResult first_below(const CodeSet& c, Stat stat, int threshold);
ViolationResult first_above(const CodeSet& c, Stat stat, int threshold);
}  // namespace serial

}  // namespace anticode::pairwise
