#include "anticode/pairwise.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anticode::pairwise {

namespace {

int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t v) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (v < cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

struct RowScan {
    int extreme = 0;
    std::size_t j = 0;
    bool any = false;
};

// Rows above the first row known to reach `stop_at` cannot carry the
// lexicographically first witness, so they may be skipped once that row is
// recorded; rows at or below it are always scanned, which keeps the merged
// result independent of thread scheduling.
template <bool Maximize>
ScanResult extreme_scan(const CodeSet& c, Stat stat, int stop_at, int workers) {
    const std::size_t m = c.size();
    if (m < 2) return {};
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    std::vector<RowScan> rows(m - 1);
    std::atomic<std::size_t> skip_from{kNoRow};
    const int nthreads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (long long ii = 0; ii < static_cast<long long>(m - 1); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i > skip_from.load(std::memory_order_relaxed)) continue;
        RowScan rr;
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            const bool better = Maximize ? v > rr.extreme : v < rr.extreme;
            if (!rr.any || better) rr = {v, j, true};
            if (Maximize ? v >= stop_at : v <= stop_at) {
                atomic_min(skip_from, i);
                break;
            }
        }
        rows[i] = rr;
    }
    ScanResult r;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!rows[i].any) continue;
        const bool better = Maximize ? rows[i].extreme > r.extreme : rows[i].extreme < r.extreme;
        if (!r.found || better) r = {rows[i].extreme, i, rows[i].j, true};
    }
    return r;
}

struct RowViolation {
    bool viol = false;
    std::size_t j = 0;
    int value = 0;
    int extreme = 0;
    bool any = false;
};

template <bool Below>
ViolationResult violation_scan(const CodeSet& c, Stat stat, int threshold, int workers) {
    const std::size_t m = c.size();
    ViolationResult r;
    if (m < 2) return r;
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    std::vector<RowViolation> rows(m - 1);
    std::atomic<std::size_t> skip_from{kNoRow};
    const int nthreads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (long long ii = 0; ii < static_cast<long long>(m - 1); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i > skip_from.load(std::memory_order_relaxed)) continue;
        RowViolation rr;
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            if (Below ? v < threshold : v > threshold) {
                rr.viol = true;
                rr.j = j;
                rr.value = v;
                atomic_min(skip_from, i);
                break;
            }
            const bool better = Below ? v < rr.extreme : v > rr.extreme;
            if (!rr.any || better) {
                rr.extreme = v;
                rr.any = true;
            }
        }
        rows[i] = rr;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (rows[i].viol) {
            r.found = true;
            r.i = i;
            r.j = rows[i].j;
            r.value = rows[i].value;
            return r;
        }
    }
    bool have = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!rows[i].any) continue;
        const bool better = Below ? rows[i].extreme < r.extreme : rows[i].extreme > r.extreme;
        if (!have || better) {
            r.extreme = rows[i].extreme;
            have = true;
        }
    }
    r.extreme_valid = have;
    return r;
}

}  // namespace

ScanResult max_scan(const CodeSet& c, Stat stat, int stop_at, int workers) {
    return extreme_scan<true>(c, stat, stop_at, workers);
}

ScanResult min_scan(const CodeSet& c, Stat stat, int stop_at, int workers) {
    return extreme_scan<false>(c, stat, stop_at, workers);
}

ViolationResult first_below(const CodeSet& c, Stat stat, int threshold, int workers) {
    return violation_scan<true>(c, stat, threshold, workers);
}

ViolationResult first_above(const CodeSet& c, Stat stat, int threshold, int workers) {
    return violation_scan<false>(c, stat, threshold, workers);
}

}  // namespace anticode::pairwise
