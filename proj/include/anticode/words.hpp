#pragma once

#include "anticode/bigint.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace anticode {

/// Symbols are stored as small integers; 0 is the distinguished zero symbol.
using Symbol = std::uint8_t;

inline constexpr int kMaxLength = 64;
inline constexpr int kMaxAlphabet = 64;

/// Ambient space of weight-k words of length n over {0, ..., q-1}.
struct SpaceParams {
    int n;
    int q;
    int k;

    SpaceParams(int n_, int q_, int k_);

    /// binom(n, k) * (q-1)^k, the number of weight-k words.
    Bigint word_count() const;

    bool operator==(const SpaceParams&) const = default;
};

/// Immutable word over {0, ..., q-1}. Length and alphabet are fixed at
/// construction; any symbol must be < q.
class Word {
public:
    Word(std::vector<Symbol> symbols, int q);

    static Word zero(int n, int q);

    int length() const { return static_cast<int>(s_.size()); }
    int alphabet() const { return q_; }

    /// 0-based coordinate access (reports use 1-based positions).
    Symbol operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }

    const std::vector<Symbol>& symbols() const { return s_; }

    bool operator==(const Word& o) const { return q_ == o.q_ && s_ == o.s_; }
    /// Lexicographic order on symbol vectors; only meaningful within one space.
    std::strong_ordering operator<=>(const Word& o) const;

private:
    std::vector<Symbol> s_;
    int q_;
};

/// Number of nonzero coordinates.
int weight(const Word& w) noexcept;

/// Hamming distance; throws dimension_mismatch unless lengths and alphabets agree.
int distance(const Word& a, const Word& b);

/// 1-based positions of the nonzero coordinates, increasing.
std::vector<int> support(const Word& w);

/// Number of coordinates where both words hold the same nonzero symbol.
int nonzero_agreement(const Word& a, const Word& b);

/// Streams all weight-k words of a space in a fixed deterministic order:
/// supports ascend lexicographically (as increasing position tuples), and
/// within one support the nonzero symbol tuples ascend lexicographically.
/// A [begin, end) support-rank window selects a slice of that order, so
/// independent consumers can split the space without coordination.
class ConstantWeightEnumerator {
public:
    explicit ConstantWeightEnumerator(const SpaceParams& space);
    ConstantWeightEnumerator(const SpaceParams& space, std::uint64_t support_rank_begin,
                             std::uint64_t support_rank_end);

    const SpaceParams& space() const { return space_; }

    /// binom(n, k); always fits in 64 bits for n <= 64.
    static std::uint64_t support_count(const SpaceParams& space);

    /// Writes the next word into `out`; returns false when exhausted.
    bool next(Word& out);

private:
    void load_support(std::uint64_t rank);
    bool advance();

    SpaceParams space_;
    std::vector<int> comb_;     // current support, increasing 0-based positions
    std::vector<Symbol> vals_;  // nonzero values on the support, each in [1, q-1]
    std::uint64_t supports_left_;  // supports not yet exhausted, incl. current
    bool done_;
};

/// Convenience: materialize the full enumeration (guarded by `max_words`).
std::vector<Word> enumerate_constant_weight(const SpaceParams& space,
                                            std::uint64_t max_words = 10'000'000);

}  // namespace anticode
