// Times the OpenMP pairwise kernels against the serial reference on full
// weight-k spaces and cross-checks that both return identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "anticode/codeset.hpp"
#include "anticode/pairwise.hpp"
#include "anticode/words.hpp"

namespace {

using namespace anticode;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

CodeSet full_space(int n, int q, int k) {
    const SpaceParams space(n, q, k);
    return CodeSet::from_words(space, true, SetKind::code,
                               enumerate_constant_weight(space));
}

struct Row {
    const char* kernel;
    double serial_ms;
    double parallel_ms;
    bool match;
};

template <typename Serial, typename Parallel, typename Eq>
Row time_kernel(const char* name, int reps, Serial&& serial, Parallel&& parallel, Eq&& eq) {
    Row row{name, 1e300, 1e300, true};
    auto s_res = serial();
    auto p_res = parallel();
    row.match = eq(s_res, p_res);
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        s_res = serial();
        row.serial_ms = std::min(row.serial_ms, ms_since(t0));
        t0 = std::chrono::steady_clock::now();
        p_res = parallel();
        row.parallel_ms = std::min(row.parallel_ms, ms_since(t0));
        row.match = row.match && eq(s_res, p_res);
    }
    return row;
}

bool run_space(int n, int q, int k, int reps) {
    const CodeSet c = full_space(n, q, k);
    std::printf("space n=%d q=%d k=%d: %zu words, %zu unordered pairs\n", n, q, k, c.size(),
                c.size() * (c.size() - 1) / 2);

    const auto scan_eq = [](const pairwise::ScanResult& a, const pairwise::ScanResult& b) {
        return a.extreme == b.extreme && a.i == b.i && a.j == b.j && a.found == b.found;
    };
    // After an early stop the extreme is meaningless, so compare it only when
    // the scan ran to completion (extreme_valid).
    const auto viol_eq = [](const pairwise::ViolationResult& a,
                            const pairwise::ViolationResult& b) {
        if (a.found != b.found || a.extreme_valid != b.extreme_valid) return false;
        if (a.found && (a.i != b.i || a.j != b.j || a.value != b.value)) return false;
        return !a.extreme_valid || a.extreme == b.extreme;
    };

    std::vector<Row> rows;
    rows.push_back(time_kernel(
        "max distance", reps,
        [&] { return pairwise::serial::max_scan(c, pairwise::Stat::distance, pairwise::kNoBound); },
        [&] { return pairwise::max_scan(c, pairwise::Stat::distance, pairwise::kNoBound, 0); },
        scan_eq));
    rows.push_back(time_kernel(
        "min distance", reps,
        [&] { return pairwise::serial::min_scan(c, pairwise::Stat::distance, -pairwise::kNoBound); },
        [&] { return pairwise::min_scan(c, pairwise::Stat::distance, -pairwise::kNoBound, 0); },
        scan_eq));
    rows.push_back(time_kernel(
        "min agreement", reps,
        [&] { return pairwise::serial::min_scan(c, pairwise::Stat::agreement, -pairwise::kNoBound); },
        [&] { return pairwise::min_scan(c, pairwise::Stat::agreement, -pairwise::kNoBound, 0); },
        scan_eq));
    rows.push_back(time_kernel(
        "agreement >= 1", reps,
        [&] { return pairwise::serial::first_below(c, pairwise::Stat::agreement, 1); },
        [&] { return pairwise::first_below(c, pairwise::Stat::agreement, 1, 0); },
        viol_eq));

    bool all_match = true;
    std::printf("  %-16s %12s %12s %9s %s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "match");
    for (const auto& row : rows) {
        all_match = all_match && row.match;
        std::printf("  %-16s %12.2f %12.2f %8.2fx %s\n", row.kernel, row.serial_ms,
                    row.parallel_ms, row.serial_ms / row.parallel_ms,
                    row.match ? "yes" : "NO");
    }
    return all_match;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::max(1, std::atoi(argv[1]));
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels fall back to serial\n");
#endif
    bool ok = true;
    ok = run_space(12, 3, 4, reps) && ok;
    ok = run_space(10, 4, 3, reps) && ok;
    ok = run_space(9, 5, 2, reps) && ok;
    if (!ok) {
        std::printf("MISMATCH between serial and parallel kernels\n");
        return 1;
    }
    return 0;
}
