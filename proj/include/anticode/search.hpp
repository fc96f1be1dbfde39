#pragma once

#include "anticode/bigint.hpp"
#include "anticode/codeset.hpp"
#include "anticode/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anticode {

enum class SearchMode { one_optimum, census };
enum class DiameterParity { even, odd };

/// Budgets for exact search. Nodes are branch-and-bound tree nodes; the
/// universe cap guards the adjacency bitset (m^2 bits); the optima cap
/// guards census lists.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 600.0;
    std::uint64_t max_universe = 20'000;
    std::uint64_t max_optima = 1'000'000;
};

struct SearchReport {
    std::string problem;
    SearchMode mode = SearchMode::one_optimum;
    std::uint64_t universe_size = 0;
    std::uint64_t optimum = 0;
    std::optional<CodeSet> witness;           // one optimum (best-found if aborted)
    std::optional<std::uint64_t> census_count;  // census mode, when completed
    std::vector<CodeSet> optima;                // census mode, all optima
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool proved_optimal = false;  // false iff a budget stopped the search
    std::string symmetry;         // how root symmetry breaking was handled
};

/// Exact maximum set of weight-k words with pairwise distance <= D.
SearchReport max_anticode(const SpaceParams& space, int D, SearchMode mode,
                          const SearchBudget& budget = {});

/// Exact maximum set of weight-k words with pairwise nonzero agreement >= t.
SearchReport max_intersecting_family(const SpaceParams& space, int t, SearchMode mode,
                                     const SearchBudget& budget = {});

/// Exact maximum set of arbitrary words of length n over Z_q with pairwise
/// distance <= D.
SearchReport max_anticode_unrestricted(int n, int q, int D, SearchMode mode,
                                       const SearchBudget& budget = {});

/// Threshold on n above which the corresponding maximality statement is
/// guaranteed (exclusive lower bound). The k/2 in the closed form is read
/// as floor(k/2), the central binomial coefficient, which is the only
/// well-typed reading for odd k.
Bigint sufficient_n(int q, int t, int k, DiameterParity parity);

}  // namespace anticode
