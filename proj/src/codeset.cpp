#include "anticode/codeset.hpp"

#include "anticode/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace anticode {

std::string to_string(SetKind kind) {
    switch (kind) {
        case SetKind::code: return "code";
        case SetKind::anticode: return "anticode";
        case SetKind::family: return "family";
    }
    return "?";
}

CodeSet CodeSet::from_words(const SpaceParams& params, bool constant_weight, SetKind kind,
                            const std::vector<Word>& words) {
    std::vector<const Word*> order;
    order.reserve(words.size());
    for (const Word& w : words) {
        if (w.length() != params.n || w.alphabet() != params.q)
            throw dimension_mismatch("word does not match the set's (n, q)");
        if (constant_weight && weight(w) != params.k)
            throw invalid_params("constant-weight set requires weight " +
                                 std::to_string(params.k) + ", got " +
                                 std::to_string(weight(w)));
        order.push_back(&w);
    }
    std::sort(order.begin(), order.end(),
              [](const Word* a, const Word* b) { return a->symbols() < b->symbols(); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i]->symbols() == order[i - 1]->symbols())
            throw invalid_params("duplicate word in set");
    std::vector<Symbol> flat;
    flat.reserve(order.size() * static_cast<std::size_t>(params.n));
    for (const Word* w : order)
        flat.insert(flat.end(), w->symbols().begin(), w->symbols().end());
    return CodeSet(params, constant_weight, kind, std::move(flat), order.size());
}

Word CodeSet::word(std::size_t i) const {
    auto r = row(i);
    return Word(std::vector<Symbol>(r.begin(), r.end()), params_.q);
}

bool CodeSet::contains(const Word& w) const {
    if (w.length() != params_.n || w.alphabet() != params_.q) return false;
    // Rows are sorted, so binary search over row indices.
    std::size_t lo = 0, hi = rows_;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto r = row(mid);
        auto cmp = std::lexicographical_compare_three_way(r.begin(), r.end(),
                                                          w.symbols().begin(),
                                                          w.symbols().end());
        if (cmp == std::strong_ordering::equal) return true;
        if (cmp == std::strong_ordering::less) lo = mid + 1; else hi = mid;
    }
    return false;
}

namespace {

struct Header {
    int n = 0, q = 0;
    std::optional<int> k;
};

std::optional<Header> parse_header(const std::string& line) {
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok != "#") return {};
    Header h;
    bool saw_n = false, saw_q = false;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw invalid_params("malformed header token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        int val = 0;
        try {
            val = std::stoi(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw invalid_params("malformed header value in '" + tok + "'");
        }
        if (key == "n") { h.n = val; saw_n = true; }
        else if (key == "q") { h.q = val; saw_q = true; }
        else if (key == "k") h.k = val;
        else throw invalid_params("unknown header key '" + key + "'");
    }
    if (!saw_n || !saw_q) throw invalid_params("header must carry n= and q=");
    return h;
}

}  // namespace

CodeSet read_words(std::istream& in, std::optional<int> q_hint, std::optional<int> k_hint,
                   SetKind kind) {
    std::string line;
    std::optional<Header> header;
    std::vector<std::vector<Symbol>> raw;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (first_content && !line.empty() && line[0] == '#') {
            header = parse_header(line);
            first_content = false;
            continue;
        }
        first_content = false;
        if (line[0] == '#')
            throw invalid_params("line " + std::to_string(lineno) +
                                 ": header allowed only before the first word");
        std::istringstream ss(line);
        std::vector<Symbol> syms;
        long v;
        while (ss >> v) {
            if (v < 0 || v >= kMaxAlphabet)
                throw invalid_params("line " + std::to_string(lineno) + ": symbol " +
                                     std::to_string(v) + " out of range");
            syms.push_back(static_cast<Symbol>(v));
        }
        if (!ss.eof())
            throw invalid_params("line " + std::to_string(lineno) + ": non-numeric token");
        raw.push_back(std::move(syms));
    }
    if (header && q_hint && header->q != *q_hint)
        throw invalid_params("header alphabet q=" + std::to_string(header->q) +
                             " conflicts with requested q=" + std::to_string(*q_hint));
    if (header && k_hint && header->k && *header->k != *k_hint)
        throw invalid_params("header weight conflicts with requested k");
    int q = header ? header->q : q_hint.value_or(0);
    if (q == 0) throw invalid_params("alphabet size unknown: no header and no q given");
    if (raw.empty()) {
        int n = header ? header->n : 1;
        std::optional<int> k = header ? header->k : k_hint;
        return CodeSet::from_words(SpaceParams(n, q, k.value_or(0)), k.has_value(), kind, {});
    }
    const std::size_t n = raw.front().size();
    std::vector<Word> words;
    words.reserve(raw.size());
    for (auto& syms : raw) {
        if (syms.size() != n) throw invalid_params("words of unequal length");
        words.emplace_back(std::move(syms), q);
    }
    if (header && header->n != static_cast<int>(n))
        throw invalid_params("header length n=" + std::to_string(header->n) +
                             " does not match the words");
    std::optional<int> k = k_hint;
    if (header && header->k) k = header->k;
    return CodeSet::from_words(SpaceParams(static_cast<int>(n), q, k.value_or(0)),
                               k.has_value(), kind, words);
}

void write_words(std::ostream& out, const CodeSet& c) {
    out << "# n=" << c.params().n << " q=" << c.params().q;
    if (c.constant_weight()) out << " k=" << c.params().k;
    out << '\n';
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto r = c.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out << ' ';
            out << int(r[j]);
        }
        out << '\n';
    }
}

CodeSet read_words_file(const std::string& path, std::optional<int> q_hint,
                        std::optional<int> k_hint, SetKind kind) {
    std::ifstream in(path);
    if (!in) throw invalid_params("cannot open '" + path + "' for reading");
    return read_words(in, q_hint, k_hint, kind);
}

void write_words_file(const std::string& path, const CodeSet& c) {
    std::ofstream out(path);
    if (!out) throw invalid_params("cannot open '" + path + "' for writing");
    write_words(out, c);
}

}  // namespace anticode
