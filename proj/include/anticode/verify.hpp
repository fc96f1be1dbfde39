#pragma once

#include "anticode/bigint.hpp"
#include "anticode/codeset.hpp"
#include "anticode/constructions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anticode {

/// Knobs for the exhaustive pairwise scans. The budget counts worst-case
/// symbol comparisons (pairs times n) and refuses larger scans up front.
/// workers <= 0 uses the OpenMP default; workers == 1 selects the serial
/// reference kernels.
struct VerifyConfig {
    std::uint64_t budget_symbol_comparisons = 1'000'000'000;
    int workers = 0;
};

/// Violating or attaining pair, with words and 1-based row indices.
struct PairWitness {
    std::size_t row_i = 0, row_j = 0;  // 1-based rows of the sorted set
    Word a, b;
    int value = 0;  // statistic at the pair
};

struct VerificationReport {
    std::string property;
    bool pass = false;
    std::optional<int> measured;          // extreme value, when fully scanned
    std::optional<PairWitness> witness;   // violating pair iff failing
    std::string note;
};

/// Passes iff every unordered pair has nonzero_agreement >= t. The witness
/// on failure is the lexicographically first violating pair. t == 0 passes
/// without scanning.
VerificationReport is_t_intersecting(const CodeSet& c, int t, const VerifyConfig& cfg = {});

/// Maximum pairwise distance; 0 for singletons. Throws undefined_input on
/// empty sets. Early exit uses only bounds derived from the set itself
/// (coordinates shared by all words), so the result stays exact.
int diameter(const CodeSet& c, const VerifyConfig& cfg = {});

/// Minimum pairwise distance. Throws undefined_input when |c| < 2.
int min_distance(const CodeSet& c, const VerifyConfig& cfg = {});

/// Passes iff every pairwise distance is <= D; witness = first pair beyond D.
VerificationReport within_diameter(const CodeSet& c, int D, const VerifyConfig& cfg = {});

/// |C| * |A| <= binom(n,k) (q-1)^k, with exact slack. Zero slack marks the
/// diameter-perfect pairing.
struct BoundCheck {
    bool holds = false;
    Bigint lhs, rhs, slack;
    bool diameter_perfect = false;
};

BoundCheck code_anticode_bound(const Bigint& code_size, const Bigint& anticode_size,
                               const SpaceParams& p);

/// Builds the family and checks, per assertion: cardinality against the
/// closed-form size, measured diameter against the diameter formula (when
/// its hypothesis holds; otherwise a note), weight, prefix structure, and
/// for F the intersecting property at level t.
struct ConstructionReport {
    Family family;
    FamilyParams params;
    std::vector<VerificationReport> checks;
    bool pass = false;
};

ConstructionReport check_construction(const FamilyParams& p, Family family,
                                      const VerifyConfig& cfg = {},
                                      std::uint64_t max_words = 10'000'000);

}  // namespace anticode
