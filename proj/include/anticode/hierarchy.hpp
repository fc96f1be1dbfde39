#pragma once

#include <vector>

#include "anticode/bigint.hpp"
#include "anticode/constructions.hpp"

namespace anticode {

enum class Winner { predecessor, successor, tie };

std::string to_string(Winner w);

/// Size comparison between the ladder entry (t, eps) and its successor
/// (t-1, eps+2); both share the diameter 2k - 2t - eps.
struct PairComparison {
    FamilyParams pred;
    FamilyParams succ;
    Bigint pred_size;
    Bigint succ_size;
    Winner winner = Winner::tie;
    long long threshold_n = 0;     // (q-2)(k-t-eps) + k
    bool matches_threshold = false;  // winner agrees with comparing n to the threshold
};

/// Requires t >= 1, 0 <= eps <= k-t-1, n >= 2k-t-eps.
PairComparison compare_pair(int q, int n, int k, int t, int eps);

struct HierarchyEntry {
    FamilyParams params;
    Bigint size;
    int diameter = 0;
    bool diameter_formula_applies = false;  // n >= 2k - t - eps
    bool is_largest = false;                // ties all flagged
};

/// All ladder entries (t, eps) with 2k - 2t - eps = D, 0 <= eps <= k - t,
/// 0 <= t < k, ordered by decreasing t. Empty when no pair is admissible.
std::vector<HierarchyEntry> hierarchy_sequence(int q, int n, int k, int D);

struct CrossoverCell {
    int q = 0;
    int n = 0;
    bool has_entries = false;
    int best_t = -1;
    int best_eps = -1;
    Bigint best_size;
    bool tie = false;                    // several entries attain the maximum
    bool thresholds_consistent = false;  // every adjacent comparison matches its threshold
};

struct CrossoverTable {
    int k = 0;
    int D = 0;
    int q_lo = 0, q_hi = 0;
    int n_lo = 0, n_hi = 0;
    std::vector<CrossoverCell> cells;  // row-major: q outer, n inner

    const CrossoverCell& cell(int q, int n) const;
};

/// Argmax of hierarchy_sequence over the inclusive (q, n) grid.
CrossoverTable crossover_table(int q_lo, int q_hi, int n_lo, int n_hi, int k, int D);

}  // namespace anticode
