#include "anticode/equivalence.hpp"

#include "anticode/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace anticode {

EquivalenceMap EquivalenceMap::identity(int n, int q) {
    EquivalenceMap m;
    m.coord_perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m.coord_perm[static_cast<std::size_t>(i)] = i;
    std::vector<Symbol> id(static_cast<std::size_t>(q));
    for (int s = 0; s < q; ++s) id[static_cast<std::size_t>(s)] = static_cast<Symbol>(s);
    m.symbol_perms.assign(static_cast<std::size_t>(n), id);
    return m;
}

void EquivalenceMap::validate() const {
    const int nn = n();
    if (nn == 0 || symbol_perms.size() != coord_perm.size())
        throw invalid_params("map components disagree on length");
    std::vector<bool> seen(static_cast<std::size_t>(nn), false);
    for (int v : coord_perm) {
        if (v < 0 || v >= nn || seen[static_cast<std::size_t>(v)])
            throw invalid_params("coordinate permutation is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    const int qq = q();
    for (const auto& p : symbol_perms) {
        if (static_cast<int>(p.size()) != qq || qq < 2 || p[0] != 0)
            throw invalid_params("symbol permutation must fix zero and cover [0, q)");
        std::vector<bool> hit(static_cast<std::size_t>(qq), false);
        for (Symbol s : p) {
            if (s >= qq || hit[s]) throw invalid_params("symbol map is not a bijection");
            hit[s] = true;
        }
    }
}

EquivalenceMap EquivalenceMap::inverse() const {
    EquivalenceMap inv;
    const auto nn = coord_perm.size();
    inv.coord_perm.resize(nn);
    inv.symbol_perms.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        const auto j = static_cast<std::size_t>(coord_perm[i]);
        inv.coord_perm[j] = static_cast<int>(i);
        std::vector<Symbol> is(symbol_perms[i].size());
        for (std::size_t s = 0; s < symbol_perms[i].size(); ++s)
            is[symbol_perms[i][s]] = static_cast<Symbol>(s);
        inv.symbol_perms[j] = std::move(is);
    }
    return inv;
}

EquivalenceMap EquivalenceMap::then(const EquivalenceMap& second) const {
    if (coord_perm.size() != second.coord_perm.size() || q() != second.q())
        throw dimension_mismatch("composing maps from different spaces");
    EquivalenceMap out;
    const auto nn = coord_perm.size();
    out.coord_perm.resize(nn);
    out.symbol_perms.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        const auto mid = static_cast<std::size_t>(coord_perm[i]);
        out.coord_perm[i] = second.coord_perm[mid];
        std::vector<Symbol> comp(symbol_perms[i].size());
        for (std::size_t s = 0; s < comp.size(); ++s)
            comp[s] = second.symbol_perms[mid][symbol_perms[i][s]];
        out.symbol_perms[i] = std::move(comp);
    }
    return out;
}

Word apply(const EquivalenceMap& m, const Word& w) {
    if (m.n() != w.length() || m.q() != w.alphabet())
        throw dimension_mismatch("map does not match the word's (n, q)");
    std::vector<Symbol> out(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i)
        out[static_cast<std::size_t>(m.coord_perm[static_cast<std::size_t>(i)])] =
            m.symbol_perms[static_cast<std::size_t>(i)][w[i]];
    return Word(std::move(out), w.alphabet());
}

CodeSet apply(const EquivalenceMap& m, const CodeSet& c) {
    if (m.n() != c.params().n || m.q() != c.params().q)
        throw dimension_mismatch("map does not match the set's (n, q)");
    std::vector<Word> words;
    words.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) words.push_back(apply(m, c.word(i)));
    return CodeSet::from_words(c.params(), c.constant_weight(), c.kind(), words);
}

namespace {

using Perm = std::vector<Symbol>;  // full map over [0, q), entry 0 fixed

std::vector<Perm> nonzero_symbol_perms(int q) {
    std::vector<Symbol> base;
    for (int s = 1; s < q; ++s) base.push_back(static_cast<Symbol>(s));
    std::vector<Perm> out;
    do {
        Perm p(static_cast<std::size_t>(q));
        p[0] = 0;
        for (int s = 1; s < q; ++s) p[static_cast<std::size_t>(s)] = base[static_cast<std::size_t>(s - 1)];
        out.push_back(std::move(p));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// Stage-wise canonical search. A step picks (source column, symbol map),
/// scores it by the per-block sorted column image (all signatures share
/// length m, so the stage-wise lexicographic minimum is the global minimum
/// of the final encoding), branches on signature ties, and refines the row
/// partition by the column values. The finished encoding equals the
/// column-major flattening of the canonical image with rows sorted.
struct CanonSearch {
    int m, n, q;
    const Symbol* flat;  // row-major source matrix
    const std::vector<Perm>& perms;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;

    std::vector<std::uint8_t> enc;
    std::vector<std::pair<int, int>> choice;  // (column, perm index) per step
    std::vector<std::uint8_t> best;
    std::vector<std::pair<int, int>> best_choice;
    bool have_best = false;

    Symbol at(int row, int col) const {
        return flat[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(col)];
    }

    void build_signature(const std::vector<std::vector<int>>& blocks, int col, const Perm& p,
                         std::vector<std::uint8_t>& sig) const {
        sig.clear();
        for (const auto& block : blocks) {
            const std::size_t start = sig.size();
            for (int row : block) sig.push_back(p[at(row, col)]);
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(start), sig.end());
        }
    }

    std::vector<std::vector<int>> refine(const std::vector<std::vector<int>>& blocks, int col,
                                         const Perm& p) const {
        std::vector<std::vector<int>> out;
        std::vector<std::pair<Symbol, int>> keyed;
        for (const auto& block : blocks) {
            keyed.clear();
            for (int row : block) keyed.emplace_back(p[at(row, col)], row);
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t i = 0;
            while (i < keyed.size()) {
                std::size_t j = i;
                out.emplace_back();
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    out.back().push_back(keyed[j++].second);
                i = j;
            }
        }
        return out;
    }

    void search(const std::vector<std::vector<int>>& blocks, std::uint64_t used_cols) {
        if (++nodes > max_nodes)
            throw resource_limit("canonicalization exceeded its node budget",
                                 std::to_string(max_nodes));
        const int step = std::popcount(used_cols);
        // A partial encoding already above the incumbent's prefix cannot win.
        if (have_best &&
            std::lexicographical_compare_three_way(
                enc.begin(), enc.end(), best.begin(),
                best.begin() + static_cast<std::ptrdiff_t>(enc.size())) ==
                std::strong_ordering::greater)
            return;
        if (step == n) {
            if (!have_best || enc < best) {
                best = enc;
                best_choice = choice;
                have_best = true;
            }
            return;
        }
        std::vector<std::uint8_t> min_sig, sig;
        std::vector<std::pair<int, int>> ties;
        // Perms acting identically on a column's contents share the
        // signature, the refinement, and the whole remaining search;
        // branching on one of them suffices.
        std::set<std::pair<int, std::vector<Symbol>>> seen;
        std::vector<Symbol> image;
        for (int col = 0; col < n; ++col) {
            if (used_cols >> col & 1) continue;
            for (std::size_t pi = 0; pi < perms.size(); ++pi) {
                build_signature(blocks, col, perms[pi], sig);
                if (!ties.empty() && sig > min_sig) continue;
                image.clear();
                for (const auto& block : blocks)
                    for (int row : block) image.push_back(perms[pi][at(row, col)]);
                if (ties.empty() || sig < min_sig) {
                    min_sig = sig;
                    ties.assign(1, {col, static_cast<int>(pi)});
                    seen.clear();
                    seen.emplace(col, image);
                } else if (seen.emplace(col, image).second) {
                    ties.emplace_back(col, static_cast<int>(pi));
                }
            }
        }
        const auto enc_len = enc.size();
        for (const auto& [col, pi] : ties) {
            enc.insert(enc.end(), min_sig.begin(), min_sig.end());
            choice.emplace_back(col, pi);
            search(refine(blocks, col, perms[static_cast<std::size_t>(pi)]),
                   used_cols | (std::uint64_t{1} << col));
            choice.pop_back();
            enc.resize(enc_len);
        }
    }
};

std::vector<std::uint8_t> header_bytes(const CodeSet& c) {
    std::vector<std::uint8_t> h = {'A', 'C', 'F', 1};
    h.push_back(static_cast<std::uint8_t>(c.params().n));
    h.push_back(static_cast<std::uint8_t>(c.params().q));
    h.push_back(c.constant_weight() ? 1 : 0);
    h.push_back(static_cast<std::uint8_t>(c.constant_weight() ? c.params().k : 0));
    const auto m = static_cast<std::uint32_t>(c.size());
    for (int shift = 24; shift >= 0; shift -= 8)
        h.push_back(static_cast<std::uint8_t>(m >> shift & 0xff));
    return h;
}

void guard_canon(const CodeSet& c, const CanonConfig& cfg) {
    if (c.params().q > cfg.max_alphabet)
        throw resource_limit("canonicalization enumerates (q-1)! symbol maps; alphabet too large",
                             "q=" + std::to_string(c.params().q));
}

/// Runs the backtracker over the given matrix with the given per-column
/// symbol maps and returns (payload, choices).
std::pair<std::vector<std::uint8_t>, std::vector<std::pair<int, int>>> canon_payload(
    const CodeSet& c, const std::vector<Symbol>& matrix, const std::vector<Perm>& perms,
    std::uint64_t max_nodes) {
    CanonSearch cs{static_cast<int>(c.size()), c.params().n, c.params().q,
                   matrix.data(),              perms,        max_nodes,
                   0,                          {},           {},
                   {},                         {},           false};
    std::vector<std::vector<int>> blocks;
    if (!c.empty()) {
        blocks.emplace_back();
        for (std::size_t r = 0; r < c.size(); ++r) blocks.back().push_back(static_cast<int>(r));
    }
    cs.search(blocks, 0);
    return {cs.best, cs.best_choice};
}

EquivalenceMap choices_to_map(const CodeSet& c, const std::vector<std::pair<int, int>>& choices,
                              const std::vector<Perm>& perms) {
    EquivalenceMap g = EquivalenceMap::identity(c.params().n, c.params().q);
    for (std::size_t step = 0; step < choices.size(); ++step) {
        const auto [col, pi] = choices[step];
        g.coord_perm[static_cast<std::size_t>(col)] = static_cast<int>(step);
        g.symbol_perms[static_cast<std::size_t>(col)] = perms[static_cast<std::size_t>(pi)];
    }
    return g;
}

/// The payload must equal the column-major flattening of the row-sorted
/// image under the witness; anything else is a bug worth failing loudly on.
void check_payload(const CodeSet& c, const EquivalenceMap& g,
                   const std::vector<std::uint8_t>& payload) {
    const CodeSet image = apply(g, c);
    const int n = c.params().n;
    std::vector<std::uint8_t> expect;
    expect.reserve(payload.size());
    for (int col = 0; col < n; ++col)
        for (std::size_t row = 0; row < image.size(); ++row)
            expect.push_back(image.row(row)[static_cast<std::size_t>(col)]);
    if (expect != payload)
        throw std::logic_error("canonical payload does not match its own witness");
}

}  // namespace

CanonicalForm canonical_form(const CodeSet& c, const CanonConfig& cfg) {
    guard_canon(c, cfg);
    const int n = c.params().n, q = c.params().q;
    CanonicalForm out;
    out.bytes = header_bytes(c);
    if (c.empty()) {
        out.to_canonical = EquivalenceMap::identity(n, q);
        return out;
    }
    if (cfg.mode == SymbolMode::per_coordinate) {
        const auto perms = nonzero_symbol_perms(q);
        auto [payload, choices] = canon_payload(c, c.flat(), perms, cfg.max_nodes);
        out.to_canonical = choices_to_map(c, choices, perms);
        check_payload(c, out.to_canonical, payload);
        out.bytes.insert(out.bytes.end(), payload.begin(), payload.end());
        return out;
    }
    // Global mode: one shared symbol permutation; minimize over it with a
    // coordinate-only canonicalization inside.
    const auto perms = nonzero_symbol_perms(q);
    const std::vector<Perm> identity_only = {perms.front()};
    std::vector<std::uint8_t> best_payload;
    EquivalenceMap best_map;
    bool have = false;
    for (const auto& sigma : perms) {
        std::vector<Symbol> transformed(c.flat().size());
        for (std::size_t i = 0; i < transformed.size(); ++i) transformed[i] = sigma[c.flat()[i]];
        auto [payload, choices] = canon_payload(c, transformed, identity_only, cfg.max_nodes);
        if (!have || payload < best_payload) {
            best_payload = payload;
            EquivalenceMap g = choices_to_map(c, choices, identity_only);
            for (auto& sp : g.symbol_perms) sp = sigma;
            best_map = std::move(g);
            have = true;
        }
    }
    check_payload(c, best_map, best_payload);
    out.to_canonical = best_map;
    out.bytes.insert(out.bytes.end(), best_payload.begin(), best_payload.end());
    return out;
}

std::string canonical_hex(const CodeSet& c, const CanonConfig& cfg) {
    static const char* digits = "0123456789abcdef";
    const auto form = canonical_form(c, cfg);
    std::string s;
    s.reserve(form.bytes.size() * 2);
    for (std::uint8_t b : form.bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

namespace {

std::vector<int> sorted_weights(const CodeSet& c) {
    std::vector<int> w;
    w.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) w.push_back(weight(c.word(i)));
    std::sort(w.begin(), w.end());
    return w;
}

std::pair<std::vector<int>, std::vector<int>> pair_stat_multisets(const CodeSet& c) {
    std::vector<int> dist, agree;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const Word a = c.word(i), b = c.word(j);
            dist.push_back(distance(a, b));
            agree.push_back(nonzero_agreement(a, b));
        }
    std::sort(dist.begin(), dist.end());
    std::sort(agree.begin(), agree.end());
    return {dist, agree};
}

}  // namespace

EquivalenceResult are_equivalent(const CodeSet& c1, const CodeSet& c2, const CanonConfig& cfg) {
    if (c1.params().n != c2.params().n || c1.params().q != c2.params().q)
        throw dimension_mismatch("equivalence needs matching (n, q)");
    EquivalenceResult r;
    if (c1.size() != c2.size()) return r;
    if (c1.size() == 0) {
        r.equivalent = true;
        r.witness = EquivalenceMap::identity(c1.params().n, c1.params().q);
        return r;
    }
    if (sorted_weights(c1) != sorted_weights(c2)) return r;
    if (pair_stat_multisets(c1) != pair_stat_multisets(c2)) return r;
    const auto f1 = canonical_form(c1, cfg);
    const auto f2 = canonical_form(c2, cfg);
    if (f1.bytes != f2.bytes) return r;
    EquivalenceMap w = f1.to_canonical.then(f2.to_canonical.inverse());
    if (!(apply(w, c1) == c2))
        throw std::logic_error("equivalence witness failed its own check");
    r.equivalent = true;
    r.witness = std::move(w);
    return r;
}

UniquenessReport uniqueness_check(const FamilyParams& p, Family family,
                                  const SearchBudget& budget, const CanonConfig& cfg) {
    UniquenessReport rep;
    const CodeSet cons = construct(family, p);
    const SpaceParams space(p.n, p.q, p.k);
    SearchReport sr;
    if (family == Family::F) {
        rep.problem = "intersecting-family(t=" + std::to_string(p.t) + ")";
        sr = max_intersecting_family(space, p.t, SearchMode::census, budget);
    } else {
        const auto D = family_diameter_formula(family, p);
        if (!D)
            throw invalid_params(
                "diameter formula inapplicable here; pick parameters where it holds");
        rep.problem = "anticode(D=" + std::to_string(*D) + ")";
        sr = max_anticode(space, *D, SearchMode::census, budget);
    }
    if (!sr.proved_optimal || !sr.census_count)
        throw resource_limit("census did not finish within its budgets",
                             std::to_string(sr.nodes) + " nodes");
    rep.construction_size = cons.size();
    rep.optimum = sr.optimum;
    rep.construction_is_optimum = Bigint(cons.size()) == Bigint(sr.optimum);
    rep.census_count = *sr.census_count;

    std::map<std::vector<std::uint8_t>, std::size_t> classes;  // bytes -> class index
    for (const auto& opt : sr.optima) {
        const auto form = canonical_form(opt, cfg);
        const auto it = classes.find(form.bytes);
        if (it == classes.end()) {
            classes.emplace(form.bytes, rep.class_sizes.size());
            rep.class_sizes.push_back(1);
        } else {
            ++rep.class_sizes[it->second];
        }
    }
    rep.num_classes = rep.class_sizes.size();
    if (rep.construction_is_optimum) {
        const auto cons_form = canonical_form(cons, cfg);
        rep.construction_among_optima = classes.count(cons_form.bytes) > 0;
    }
    rep.all_optima_match_construction =
        rep.num_classes == 1 && rep.construction_among_optima;
    return rep;
}

}  // namespace anticode
