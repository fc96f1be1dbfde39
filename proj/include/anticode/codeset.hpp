#pragma once

#include "anticode/words.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anticode {

/// Role a set plays in a check; affects reporting only, never the math.
enum class SetKind { code, anticode, family };

std::string to_string(SetKind kind);

/// Immutable set of distinct words sharing (n, q), stored row-major with the
/// rows in lexicographic order. If the constant-weight flag is set, every
/// word has weight k and k is meaningful; otherwise k is ignored.
class CodeSet {
public:
    /// Validates, sorts, and rejects duplicates.
    static CodeSet from_words(const SpaceParams& params, bool constant_weight,
                              SetKind kind, const std::vector<Word>& words);

    const SpaceParams& params() const { return params_; }
    SetKind kind() const { return kind_; }
    bool constant_weight() const { return constant_weight_; }

    std::size_t size() const { return rows_; }
    bool empty() const { return rows_ == 0; }

    /// Row i in lexicographic order, as a borrowed span of n symbols.
    std::span<const Symbol> row(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(params_.n),
                static_cast<std::size_t>(params_.n)};
    }
    Word word(std::size_t i) const;

    const std::vector<Symbol>& flat() const { return flat_; }

    bool contains(const Word& w) const;

    bool operator==(const CodeSet& o) const {
        return params_ == o.params_ && flat_ == o.flat_;
    }

private:
    CodeSet(SpaceParams params, bool constant_weight, SetKind kind,
            std::vector<Symbol> flat, std::size_t rows)
        : params_(params), constant_weight_(constant_weight), kind_(kind),
          flat_(std::move(flat)), rows_(rows) {}

    SpaceParams params_;
    bool constant_weight_;
    SetKind kind_;
    std::vector<Symbol> flat_;
    std::size_t rows_;
};

/// Text format: one word per line, symbols as decimal integers separated by
/// single spaces, with an optional leading header `# n=<n> q=<q> k=<k>`
/// (k present only for constant-weight sets). Blank lines are ignored.
///
/// Reading requires the alphabet size from the header or from `q_hint`
/// (header wins when both agree; a conflict is an error). The set is marked
/// constant-weight when the header carries k or `k_hint` is given.
CodeSet read_words(std::istream& in, std::optional<int> q_hint = {},
                   std::optional<int> k_hint = {}, SetKind kind = SetKind::code);

void write_words(std::ostream& out, const CodeSet& c);

CodeSet read_words_file(const std::string& path, std::optional<int> q_hint = {},
                        std::optional<int> k_hint = {}, SetKind kind = SetKind::code);

void write_words_file(const std::string& path, const CodeSet& c);

}  // namespace anticode
