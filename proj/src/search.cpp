#include "anticode/search.hpp"

#include "anticode/errors.hpp"
#include "anticode/pairwise.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anticode {

namespace {

using Clock = std::chrono::steady_clock;

enum class Predicate { distance_at_most, agreement_at_least };

/// Flat universe of candidate words plus a cached adjacency bitset for the
/// compatibility graph. Rows follow the fixed enumeration order, which makes
/// every traversal decision reproducible.
struct Universe {
    int n = 0, q = 0;
    std::size_t m = 0;
    std::vector<Symbol> flat;
    std::size_t blocks = 0;
    std::vector<std::uint64_t> adj;

    const Symbol* row(std::size_t i) const { return flat.data() + i * static_cast<std::size_t>(n); }

    bool adjacent(std::size_t u, std::size_t v) const {
        return (adj[u * blocks + (v >> 6)] >> (v & 63)) & 1;
    }

    const std::uint64_t* adj_row(std::size_t u) const { return adj.data() + u * blocks; }

    void build_adjacency(Predicate pred, int bound) {
        blocks = (m + 63) / 64;
        adj.assign(m * blocks, 0);
#pragma omp parallel for schedule(dynamic, 16)
        for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            const Symbol* a = row(i);
            std::uint64_t* out = adj.data() + i * blocks;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                const Symbol* b = row(j);
                int v;
                if (pred == Predicate::distance_at_most) {
                    v = 0;
                    for (int c = 0; c < n; ++c) v += a[c] != b[c];
                    if (v <= bound) out[j >> 6] |= std::uint64_t{1} << (j & 63);
                } else {
                    v = 0;
                    for (int c = 0; c < n; ++c) v += (a[c] != 0) & (a[c] == b[c]);
                    if (v >= bound) out[j >> 6] |= std::uint64_t{1} << (j & 63);
                }
            }
        }
    }
};

Universe constant_weight_universe(const SpaceParams& space, std::uint64_t max_universe) {
    const Bigint total = space.word_count();
    if (total > max_universe)
        throw resource_limit("search universe exceeds the configured cap", total.str());
    Universe u;
    u.n = space.n;
    u.q = space.q;
    u.m = static_cast<std::size_t>(total);
    u.flat.reserve(u.m * static_cast<std::size_t>(space.n));
    ConstantWeightEnumerator en(space);
    Word w = Word::zero(space.n, space.q);
    while (en.next(w)) u.flat.insert(u.flat.end(), w.symbols().begin(), w.symbols().end());
    return u;
}

Universe full_space_universe(int n, int q, std::uint64_t max_universe) {
    SpaceParams check(n, q, 0);
    (void)check;
    const Bigint total = ipow(q, static_cast<std::uint64_t>(n));
    if (total > max_universe)
        throw resource_limit("search universe exceeds the configured cap", total.str());
    Universe u;
    u.n = n;
    u.q = q;
    u.m = static_cast<std::size_t>(total);
    u.flat.assign(u.m * static_cast<std::size_t>(n), 0);
    // Lexicographic odometer: the last coordinate is least significant.
    std::vector<Symbol> cur(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < u.m; ++i) {
        std::copy(cur.begin(), cur.end(), u.flat.begin() + i * static_cast<std::size_t>(n));
        for (int c = n - 1; c >= 0; --c) {
            if (++cur[static_cast<std::size_t>(c)] < q) break;
            cur[static_cast<std::size_t>(c)] = 0;
        }
    }
    return u;
}

struct BudgetState {
    std::uint64_t max_nodes;
    Clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool aborted = false;

    bool tick() {
        if (aborted) return false;
        ++nodes;
        if (nodes > max_nodes) {
            aborted = true;
            return false;
        }
        if ((nodes & 1023) == 0 && Clock::now() > deadline) {
            aborted = true;
            return false;
        }
        return true;
    }
};

/// Serial branch-and-bound maximum clique with a greedy-coloring bound
/// (vertices regrouped into color classes per node; classes ascend, so the
/// per-vertex bound is nondecreasing along the candidate order). In census
/// mode the bound keeps ties (strictly-below prunes only) and every clique
/// of the target size is recorded exactly once, by the standard
/// last-vertex partition of the branching.
struct CliqueSearch {
    const Universe& g;
    BudgetState& budget;
    bool census = false;
    std::uint64_t target = 0;  // census: record cliques of exactly this size
    std::uint64_t max_optima = 0;
    bool optima_overflow = false;

    std::vector<std::uint32_t> best;
    std::vector<std::vector<std::uint32_t>> optima;
    std::vector<std::uint32_t> cur;

    explicit CliqueSearch(const Universe& g_, BudgetState& b) : g(g_), budget(b) {}

    void color_sort(const std::vector<std::uint32_t>& P, std::vector<std::uint32_t>& ordered,
                    std::vector<int>& colors) const {
        // Greedy coloring in candidate order; class bitsets detect conflicts.
        std::vector<std::vector<std::uint32_t>> classes;
        std::vector<std::vector<std::uint64_t>> class_bits;
        for (std::uint32_t v : P) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                const std::uint64_t* av = g.adj_row(v);
                bool conflict = false;
                for (std::size_t b = 0; b < g.blocks && !conflict; ++b)
                    conflict = (av[b] & class_bits[c][b]) != 0;
                if (!conflict) break;
            }
            if (c == classes.size()) {
                classes.emplace_back();
                class_bits.emplace_back(g.blocks, 0);
            }
            classes[c].push_back(v);
            class_bits[c][v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        ordered.clear();
        colors.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::uint32_t v : classes[c]) {
                ordered.push_back(v);
                colors.push_back(static_cast<int>(c) + 1);
            }
    }

    void record_optimum() {
        if (optima.size() >= max_optima) {
            optima_overflow = true;
            return;
        }
        optima.push_back(cur);
    }

    void expand(const std::vector<std::uint32_t>& P, const std::vector<int>& colors) {
        if (!budget.tick()) return;
        for (std::size_t idx = P.size(); idx-- > 0;) {
            if (budget.aborted || optima_overflow) return;
            const std::uint64_t bound = cur.size() + static_cast<std::uint64_t>(colors[idx]);
            if (census ? bound < target : bound <= best.size()) return;
            const std::uint32_t v = P[idx];
            cur.push_back(v);
            std::vector<std::uint32_t> next;
            next.reserve(idx);
            for (std::size_t u = 0; u < idx; ++u)
                if (g.adjacent(P[u], v)) next.push_back(P[u]);
            if (census && cur.size() == target) {
                record_optimum();
            } else if (next.empty()) {
                if (!census && cur.size() > best.size()) best = cur;
            } else {
                std::vector<std::uint32_t> ordered;
                std::vector<int> next_colors;
                color_sort(next, ordered, next_colors);
                expand(ordered, next_colors);
            }
            cur.pop_back();
        }
    }

    void run_from(const std::vector<std::uint32_t>& roots, const std::vector<std::uint32_t>& P) {
        cur.assign(roots.begin(), roots.end());
        if (!census && cur.size() > best.size()) best = cur;
        if (census && cur.size() == target) {
            record_optimum();
            return;
        }
        if (P.empty()) return;
        std::vector<std::uint32_t> ordered;
        std::vector<int> colors;
        color_sort(P, ordered, colors);
        expand(ordered, colors);
    }
};

CodeSet clique_to_codeset(const Universe& g, const std::vector<std::uint32_t>& clique,
                          const SpaceParams& space, bool constant_weight, SetKind kind) {
    std::vector<Word> words;
    words.reserve(clique.size());
    for (std::uint32_t v : clique) {
        const Symbol* r = g.row(v);
        words.emplace_back(std::vector<Symbol>(r, r + g.n), g.q);
    }
    return CodeSet::from_words(space, constant_weight, kind, words);
}

std::size_t find_row(const Universe& g, const std::vector<Symbol>& word) {
    // The universe is not always lex-sorted (constant-weight order is
    // support-major), so scan; callers use this only for a handful of roots.
    for (std::size_t i = 0; i < g.m; ++i)
        if (std::equal(word.begin(), word.end(), g.row(i))) return i;
    throw invalid_params("orbit representative not found in the universe");
}

SearchReport run_search(Universe&& g, Predicate pred, int bound, SearchMode mode,
                        const SearchBudget& budget, const SpaceParams& space,
                        bool constant_weight, const std::string& problem,
                        const std::vector<std::vector<Symbol>>& orbit_reps) {
    const auto t0 = Clock::now();
    g.build_adjacency(pred, bound);

    SearchReport rep;
    rep.problem = problem;
    rep.mode = mode;
    rep.universe_size = g.m;

    BudgetState bs{budget.max_nodes,
                   t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget.max_seconds))};
    CliqueSearch phase1(g, bs);

    // Phase 1 (both modes): one optimum, rooting only at orbit
    // representatives — every maximum clique has an image through the
    // isometry group meeting some representative, and the optimum size is
    // invariant under the group.
    std::vector<std::uint32_t> all(g.m);
    for (std::size_t i = 0; i < g.m; ++i) all[i] = static_cast<std::uint32_t>(i);
    for (const auto& repword : orbit_reps) {
        const auto root = static_cast<std::uint32_t>(find_row(g, repword));
        std::vector<std::uint32_t> P;
        for (std::uint32_t u : all)
            if (u != root && g.adjacent(u, root)) P.push_back(u);
        phase1.run_from({root}, P);
        if (bs.aborted) break;
    }
    rep.nodes = bs.nodes;
    rep.optimum = phase1.best.size();
    if (!phase1.best.empty())
        rep.witness = clique_to_codeset(g, phase1.best, space, constant_weight,
                                        SetKind::anticode);
    rep.proved_optimal = !bs.aborted;
    rep.symmetry = "root fixed to one representative per word orbit";

    if (mode == SearchMode::census && !bs.aborted) {
        // Phase 2: enumerate every clique of the proven optimum size with
        // symmetry breaking off, so the census counts plain set solutions.
        CliqueSearch phase2(g, bs);
        phase2.census = true;
        phase2.target = rep.optimum;
        phase2.max_optima = budget.max_optima;
        phase2.run_from({}, all);
        rep.nodes = bs.nodes;
        if (phase2.optima_overflow)
            throw resource_limit("census exceeded the optima cap",
                                 std::to_string(budget.max_optima) + "+");
        if (!bs.aborted) {
            rep.census_count = phase2.optima.size();
            rep.optima.reserve(phase2.optima.size());
            for (const auto& cl : phase2.optima)
                rep.optima.push_back(
                    clique_to_codeset(g, cl, space, constant_weight, SetKind::anticode));
            rep.symmetry =
                "root fixed to orbit representatives in phase 1; census ran unrestricted";
        } else {
            rep.proved_optimal = false;
        }
    }

    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

std::vector<Symbol> step_word(int n, int ones) {
    std::vector<Symbol> w(static_cast<std::size_t>(n), 0);
    std::fill_n(w.begin(), ones, Symbol{1});
    return w;
}

}  // namespace

SearchReport max_anticode(const SpaceParams& space, int D, SearchMode mode,
                          const SearchBudget& budget) {
    if (D < 0) throw invalid_params("diameter bound must be nonnegative");
    Universe g = constant_weight_universe(space, budget.max_universe);
    // All weight-k words form a single orbit: coordinate permutations move
    // the support anywhere and per-coordinate symbol maps send any nonzero
    // pattern to all ones.
    return run_search(std::move(g), Predicate::distance_at_most, D, mode, budget, space,
                      true, "anticode", {step_word(space.n, space.k)});
}

SearchReport max_intersecting_family(const SpaceParams& space, int t, SearchMode mode,
                                     const SearchBudget& budget) {
    if (t < 0) throw invalid_params("intersection level t must be nonnegative");
    Universe g = constant_weight_universe(space, budget.max_universe);
    return run_search(std::move(g), Predicate::agreement_at_least, t, mode, budget, space,
                      true, "intersecting-family", {step_word(space.n, space.k)});
}

SearchReport max_anticode_unrestricted(int n, int q, int D, SearchMode mode,
                                       const SearchBudget& budget) {
    if (D < 0) throw invalid_params("diameter bound must be nonnegative");
    Universe g = full_space_universe(n, q, budget.max_universe);
    // Orbits of the isometry group on the full space are the weight classes.
    std::vector<std::vector<Symbol>> reps;
    reps.reserve(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) reps.push_back(step_word(n, w));
    return run_search(std::move(g), Predicate::distance_at_most, D, mode, budget,
                      SpaceParams(n, q, 0), false, "anticode-unrestricted", reps);
}

Bigint sufficient_n(int q, int t, int k, DiameterParity parity) {
    if (q < 2 || t < 0 || k <= t)
        throw invalid_params("threshold needs q >= 2 and k > t >= 0");
    const Bigint central = binomial(k, k / 2);
    if (parity == DiameterParity::odd) {
        const Bigint f = k - t - 1;
        return ipow(q - 1, static_cast<std::uint64_t>(t)) * f * f * central + 2 * k - t - 2;
    }
    const Bigint f = k - t;
    return ipow(q - 1, static_cast<std::uint64_t>(t)) * f * f * central + 2 * k - t - 1;
}

}  // namespace anticode
