#pragma once

#include "anticode/bigint.hpp"
#include "anticode/codeset.hpp"
#include "anticode/constructions.hpp"
#include "anticode/search.hpp"
#include "anticode/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anticode {

/// Isometry of the weight-preserving kind: a coordinate permutation plus,
/// for every coordinate, a permutation of the nonzero symbols (zero fixed).
/// Applying one preserves weight, Hamming distance, and nonzero agreement.
struct EquivalenceMap {
    /// Image position of source coordinate i (0-based).
    std::vector<int> coord_perm;
    /// symbol_perms[i][s] = image of symbol s written at source coordinate i;
    /// each entry is a permutation of {0..q-1} fixing 0.
    std::vector<std::vector<Symbol>> symbol_perms;

    static EquivalenceMap identity(int n, int q);

    int n() const { return static_cast<int>(coord_perm.size()); }
    int q() const { return symbol_perms.empty() ? 0 : static_cast<int>(symbol_perms[0].size()); }

    /// Throws invalid_params unless both components are well-formed permutations.
    void validate() const;

    EquivalenceMap inverse() const;
    /// Composition: apply this map first, then `second`.
    EquivalenceMap then(const EquivalenceMap& second) const;
};

Word apply(const EquivalenceMap& m, const Word& w);
CodeSet apply(const EquivalenceMap& m, const CodeSet& c);

/// Whether symbol permutations may differ per coordinate (the full
/// weight-preserving isometry group) or one permutation must be shared by
/// all coordinates (a strictly smaller group, exposed for comparison).
enum class SymbolMode { per_coordinate, global };

struct CanonConfig {
    SymbolMode mode = SymbolMode::per_coordinate;
    std::uint64_t max_nodes = 5'000'000;  // canonicalization backtrack nodes
    int max_alphabet = 8;  // (q-1)! symbol permutations are enumerated
};

/// Canonical representative of the equivalence class: two sets have equal
/// bytes iff they are equivalent (under the configured group). The bytes are
/// a fixed header plus the column-major flattening of the row-sorted
/// canonical image; to_canonical is a group element realizing it.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    EquivalenceMap to_canonical;
};

CanonicalForm canonical_form(const CodeSet& c, const CanonConfig& cfg = {});
std::string canonical_hex(const CodeSet& c, const CanonConfig& cfg = {});

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<EquivalenceMap> witness;  // sends c1 onto c2 when equivalent
};

/// Decides equivalence via cheap invariants (size, weight multiset,
/// distance and agreement multisets) and canonical forms; any returned
/// witness has been applied and checked.
EquivalenceResult are_equivalent(const CodeSet& c1, const CodeSet& c2,
                                 const CanonConfig& cfg = {});

/// Census the extremal problem the family solves (intersecting level t for
/// F, target diameter for the others), canonicalize every optimum, and
/// compare the classes against the constructed set.
struct UniquenessReport {
    std::string problem;
    Bigint construction_size;
    std::uint64_t optimum = 0;
    bool construction_is_optimum = false;
    std::uint64_t census_count = 0;
    std::uint64_t num_classes = 0;
    std::vector<std::uint64_t> class_sizes;  // optima per class, first-seen order
    bool construction_among_optima = false;
    bool all_optima_match_construction = false;
};

UniquenessReport uniqueness_check(const FamilyParams& p, Family family,
                                  const SearchBudget& budget = {},
                                  const CanonConfig& cfg = {});

}  // namespace anticode
