#include "anticode/pairwise.hpp"

namespace anticode::pairwise::serial {

ScanResult max_scan(const CodeSet& c, Stat stat, int stop_at) {
    ScanResult r;
    const std::size_t m = c.size();
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            if (!r.found || v > r.extreme) r = {v, i, j, true};
            // Pairs scan in lexicographic order, so the first pair reaching a
            // caller-proven upper bound is the lex-first witness of the max.
            if (v >= stop_at) return r;
        }
    }
    return r;
}

ScanResult min_scan(const CodeSet& c, Stat stat, int stop_at) {
    ScanResult r;
    const std::size_t m = c.size();
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            if (!r.found || v < r.extreme) r = {v, i, j, true};
            if (v <= stop_at) return r;
        }
    }
    return r;
}

ViolationResult first_below(const CodeSet& c, Stat stat, int threshold) {
    ViolationResult r;
    const std::size_t m = c.size();
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    bool have_extreme = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            if (v < threshold) {
                r.found = true;
                r.i = i;
                r.j = j;
                r.value = v;
                return r;
            }
            if (!have_extreme || v < r.extreme) {
                r.extreme = v;
                have_extreme = true;
            }
        }
    }
    r.extreme_valid = have_extreme;
    return r;
}

ViolationResult first_above(const CodeSet& c, Stat stat, int threshold) {
    ViolationResult r;
    const std::size_t m = c.size();
    const int n = c.params().n;
    const Symbol* base = c.flat().data();
    bool have_extreme = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Symbol* wi = base + i * static_cast<std::size_t>(n);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int v = eval(stat, wi, base + j * static_cast<std::size_t>(n), n);
            if (v > threshold) {
                r.found = true;
                r.i = i;
                r.j = j;
                r.value = v;
                return r;
            }
            if (!have_extreme || v > r.extreme) {
                r.extreme = v;
                have_extreme = true;
            }
        }
    }
    r.extreme_valid = have_extreme;
    return r;
}

}  // namespace anticode::pairwise::serial
