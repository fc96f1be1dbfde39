#include "anticode/words.hpp"

#include "anticode/errors.hpp"

#include <algorithm>
#include <string>

namespace anticode {

SpaceParams::SpaceParams(int n_, int q_, int k_) : n(n_), q(q_), k(k_) {
    if (n < 1 || n > kMaxLength)
        throw invalid_params("length n must be in [1, " + std::to_string(kMaxLength) +
                             "], got " + std::to_string(n));
    if (q < 2 || q > kMaxAlphabet)
        throw invalid_params("alphabet size q must be in [2, " + std::to_string(kMaxAlphabet) +
                             "], got " + std::to_string(q));
    if (k < 0 || k > n)
        throw invalid_params("weight k must be in [0, n], got k=" + std::to_string(k) +
                             " with n=" + std::to_string(n));
}

Bigint SpaceParams::word_count() const {
    return binomial(n, k) * ipow(q - 1, static_cast<std::uint64_t>(k));
}

Word::Word(std::vector<Symbol> symbols, int q) : s_(std::move(symbols)), q_(q) {
    if (q_ < 2 || q_ > kMaxAlphabet)
        throw invalid_params("alphabet size q must be in [2, " + std::to_string(kMaxAlphabet) +
                             "], got " + std::to_string(q_));
    if (s_.empty() || s_.size() > static_cast<std::size_t>(kMaxLength))
        throw invalid_params("word length must be in [1, " + std::to_string(kMaxLength) +
                             "], got " + std::to_string(s_.size()));
    for (Symbol v : s_)
        if (v >= q_)
            throw invalid_params("symbol " + std::to_string(int(v)) +
                                 " out of range for q=" + std::to_string(q_));
}

Word Word::zero(int n, int q) {
    if (n < 1 || n > kMaxLength)
        throw invalid_params("length n must be in [1, " + std::to_string(kMaxLength) + "]");
    return Word(std::vector<Symbol>(static_cast<std::size_t>(n), 0), q);
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (s_.size() != o.s_.size() || q_ != o.q_)
        throw dimension_mismatch("comparing words from different spaces");
    return std::lexicographical_compare_three_way(s_.begin(), s_.end(), o.s_.begin(),
                                                  o.s_.end());
}

int weight(const Word& w) noexcept {
    int c = 0;
    for (Symbol v : w.symbols()) c += (v != 0);
    return c;
}

int distance(const Word& a, const Word& b) {
    if (a.length() != b.length() || a.alphabet() != b.alphabet())
        throw dimension_mismatch("distance requires matching length and alphabet");
    int d = 0;
    for (int i = 0; i < a.length(); ++i) d += (a[i] != b[i]);
    return d;
}

std::vector<int> support(const Word& w) {
    std::vector<int> s;
    for (int i = 0; i < w.length(); ++i)
        if (w[i] != 0) s.push_back(i + 1);
    return s;
}

int nonzero_agreement(const Word& a, const Word& b) {
    if (a.length() != b.length() || a.alphabet() != b.alphabet())
        throw dimension_mismatch("nonzero_agreement requires matching length and alphabet");
    int c = 0;
    for (int i = 0; i < a.length(); ++i) c += (a[i] != 0 && a[i] == b[i]);
    return c;
}

std::uint64_t ConstantWeightEnumerator::support_count(const SpaceParams& space) {
    return static_cast<std::uint64_t>(binomial(space.n, space.k));
}

ConstantWeightEnumerator::ConstantWeightEnumerator(const SpaceParams& space)
    : ConstantWeightEnumerator(space, 0, support_count(space)) {}

ConstantWeightEnumerator::ConstantWeightEnumerator(const SpaceParams& space,
                                                   std::uint64_t support_rank_begin,
                                                   std::uint64_t support_rank_end)
    : space_(space), done_(false) {
    const std::uint64_t total = support_count(space);
    if (support_rank_begin > support_rank_end || support_rank_end > total)
        throw invalid_params("support rank window out of range");
    supports_left_ = support_rank_end - support_rank_begin;
    if (supports_left_ == 0 || space_.k == 0) {
        // Weight 0 has the single empty-support word, emitted iff the window
        // covers rank 0.
        done_ = space_.k == 0 ? (supports_left_ == 0) : true;
        if (space_.k == 0) supports_left_ = 1;
        comb_.clear();
        vals_.clear();
        return;
    }
    load_support(support_rank_begin);
    vals_.assign(static_cast<std::size_t>(space_.k), 1);
}

void ConstantWeightEnumerator::load_support(std::uint64_t rank) {
    // Unrank in lexicographic order of increasing position tuples: count how
    // many k-subsets start below each candidate first element, then recurse.
    comb_.resize(static_cast<std::size_t>(space_.k));
    Bigint r = rank;
    int lo = 0;
    for (int p = 0; p < space_.k; ++p) {
        int c = lo;
        for (;; ++c) {
            Bigint block = binomial(space_.n - 1 - c, space_.k - 1 - p);
            if (r < block) break;
            r -= block;
        }
        comb_[static_cast<std::size_t>(p)] = c;
        lo = c + 1;
    }
}

bool ConstantWeightEnumerator::advance() {
    // Symbol odometer over [1, q-1]^k, least significant at the tail.
    for (int i = space_.k - 1; i >= 0; --i) {
        auto& v = vals_[static_cast<std::size_t>(i)];
        if (v + 1 < space_.q) {
            ++v;
            std::fill(vals_.begin() + i + 1, vals_.end(), Symbol{1});
            return true;
        }
    }
    if (--supports_left_ == 0) return false;
    // Next combination in lexicographic order.
    int i = space_.k - 1;
    while (i >= 0 && comb_[static_cast<std::size_t>(i)] == space_.n - space_.k + i) --i;
    ++comb_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < space_.k; ++j)
        comb_[static_cast<std::size_t>(j)] = comb_[static_cast<std::size_t>(j - 1)] + 1;
    std::fill(vals_.begin(), vals_.end(), Symbol{1});
    return true;
}

bool ConstantWeightEnumerator::next(Word& out) {
    if (done_) return false;
    std::vector<Symbol> s(static_cast<std::size_t>(space_.n), 0);
    for (int p = 0; p < space_.k; ++p)
        s[static_cast<std::size_t>(comb_[static_cast<std::size_t>(p)])] =
            vals_[static_cast<std::size_t>(p)];
    out = Word(std::move(s), space_.q);
    done_ = space_.k == 0 ? true : !advance();
    return true;
}

std::vector<Word> enumerate_constant_weight(const SpaceParams& space, std::uint64_t max_words) {
    const Bigint total = space.word_count();
    if (total > max_words)
        throw resource_limit("constant-weight space too large to materialize",
                             total.str());
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(total));
    ConstantWeightEnumerator en(space);
    Word w = Word::zero(space.n, space.q);
    while (en.next(w)) out.push_back(w);
    return out;
}

}  // namespace anticode
