#include "anticode/hierarchy.hpp"

#include <string>

#include "anticode/errors.hpp"

namespace anticode {

std::string to_string(Winner w) {
    switch (w) {
        case Winner::predecessor: return "predecessor";
        case Winner::successor: return "successor";
        case Winner::tie: return "tie";
    }
    throw invalid_params("unknown winner tag");
}

namespace {

Winner size_winner(const Bigint& pred, const Bigint& succ) {
    if (pred > succ) return Winner::predecessor;
    if (succ > pred) return Winner::successor;
    return Winner::tie;
}

Winner threshold_winner(long long n, long long threshold) {
    if (n < threshold) return Winner::successor;
    if (n > threshold) return Winner::predecessor;
    return Winner::tie;
}

PairComparison compare_entries(const FamilyParams& pred, const FamilyParams& succ) {
    PairComparison c{pred, succ, size_formula(pred), size_formula(succ)};
    c.winner = size_winner(c.pred_size, c.succ_size);
    c.threshold_n = static_cast<long long>(pred.q - 2) * (pred.k - pred.t - pred.eps) + pred.k;
    c.matches_threshold = c.winner == threshold_winner(pred.n, c.threshold_n);
    return c;
}

}  // namespace

PairComparison compare_pair(int q, int n, int k, int t, int eps) {
    if (t < 1) throw invalid_params("need t >= 1 so the successor's t-1 stays nonnegative");
    if (eps < 0 || eps > k - t - 1)
        throw invalid_params("need 0 <= eps <= k-t-1 so the successor's eps+2 stays admissible");
    if (n < 2 * k - t - eps)
        throw invalid_params("need n >= 2k-t-eps so the shared diameter formula applies");
    const FamilyParams pred(q, n, k, t, eps);
    const FamilyParams succ(q, n, k, t - 1, eps + 2);
    return compare_entries(pred, succ);
}

std::vector<HierarchyEntry> hierarchy_sequence(int q, int n, int k, int D) {
    if (q < 2 || k < 1 || n < k) throw invalid_params("need q >= 2 and n >= k >= 1");
    if (D < 0) throw invalid_params("diameter must be nonnegative");
    std::vector<HierarchyEntry> out;
    for (int t = k - 1; t >= 0; --t) {
        const int eps = 2 * (k - t) - D;
        if (eps < 0 || eps > k - t) continue;
        const FamilyParams p(q, n, k, t, eps);
        out.push_back(HierarchyEntry{p, size_formula(p), D, p.diameter_applicable(), false});
    }
    if (!out.empty()) {
        const Bigint* max_size = &out.front().size;
        for (const auto& e : out)
            if (e.size > *max_size) max_size = &e.size;
        for (auto& e : out) e.is_largest = e.size == *max_size;
    }
    return out;
}

const CrossoverCell& CrossoverTable::cell(int q, int n) const {
    if (q < q_lo || q > q_hi || n < n_lo || n > n_hi)
        throw invalid_params("cell outside the table's ranges");
    const auto width = static_cast<std::size_t>(n_hi - n_lo + 1);
    return cells[static_cast<std::size_t>(q - q_lo) * width + static_cast<std::size_t>(n - n_lo)];
}

CrossoverTable crossover_table(int q_lo, int q_hi, int n_lo, int n_hi, int k, int D) {
    if (q_lo > q_hi || n_lo > n_hi) throw invalid_params("ranges must be nonempty");
    if (q_lo < 2 || k < 1 || n_lo < k) throw invalid_params("need q >= 2 and n >= k >= 1");
    if (D < 0) throw invalid_params("diameter must be nonnegative");
    CrossoverTable table;
    table.k = k;
    table.D = D;
    table.q_lo = q_lo;
    table.q_hi = q_hi;
    table.n_lo = n_lo;
    table.n_hi = n_hi;
    const long long width = n_hi - n_lo + 1;
    const long long total = static_cast<long long>(q_hi - q_lo + 1) * width;
    table.cells.resize(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const int q = q_lo + static_cast<int>(idx / width);
        const int n = n_lo + static_cast<int>(idx % width);
        CrossoverCell cell;
        cell.q = q;
        cell.n = n;
        const auto seq = hierarchy_sequence(q, n, k, D);
        cell.has_entries = !seq.empty();
        cell.thresholds_consistent = true;
        if (cell.has_entries) {
            const HierarchyEntry* best = &seq.front();
            std::size_t winners = 0;
            for (const auto& e : seq) {
                if (e.size > best->size) best = &e;
                if (e.is_largest) ++winners;
            }
            cell.best_t = best->params.t;
            cell.best_eps = best->params.eps;
            cell.best_size = best->size;
            cell.tie = winners > 1;
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                const auto cmp = compare_entries(seq[i].params, seq[i + 1].params);
                if (!cmp.matches_threshold) cell.thresholds_consistent = false;
            }
        }
        table.cells[static_cast<std::size_t>(idx)] = std::move(cell);
    }
    return table;
}

}  // namespace anticode
