#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "anticode/constructions.hpp"
#include "anticode/equivalence.hpp"
#include "anticode/errors.hpp"
#include "anticode/verify.hpp"
#include "doctest.h"

using namespace anticode;

namespace {

Word make(std::vector<int> v, int q) {
    std::vector<Symbol> s(v.begin(), v.end());
    return Word(std::move(s), q);
}

CodeSet set_of(std::vector<std::vector<int>> rows, int n, int q, int k) {
    std::vector<Word> words;
    for (auto& r : rows) words.push_back(make(r, q));
    return CodeSet::from_words(SpaceParams(n, q, k), true, SetKind::anticode, words);
}

EquivalenceMap random_map(std::mt19937& rng, int n, int q) {
    EquivalenceMap m = EquivalenceMap::identity(n, q);
    std::shuffle(m.coord_perm.begin(), m.coord_perm.end(), rng);
    for (auto& perm : m.symbol_perms)
        std::shuffle(perm.begin() + 1, perm.end(), rng);  // zero stays fixed
    return m;
}

}  // namespace

TEST_CASE("maps apply coordinate and symbol permutations together") {
    EquivalenceMap m = EquivalenceMap::identity(3, 3);
    m.coord_perm = {1, 2, 0};
    m.symbol_perms[0] = {0, 2, 1};  // swaps 1 and 2 at source coordinate 0
    const Word w = make({1, 2, 0}, 3);
    // Coordinate 0 (symbol 1 -> 2) lands at position 1; coordinate 1
    // (symbol 2, identity) lands at position 2; coordinate 2 at position 0.
    CHECK(apply(m, w) == make({0, 2, 2}, 3));
    CHECK(apply(EquivalenceMap::identity(3, 3), w) == w);
}

TEST_CASE("applying a map preserves the metric structure") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const int q = 3 + static_cast<int>(rng() % 3);
        auto m = random_map(rng, n, q);
        m.validate();
        std::vector<Symbol> a(static_cast<std::size_t>(n)), b(a);
        for (auto& x : a) x = static_cast<Symbol>(rng() % static_cast<unsigned>(q));
        for (auto& x : b) x = static_cast<Symbol>(rng() % static_cast<unsigned>(q));
        Word wa(std::move(a), q), wb(std::move(b), q);
        CHECK(weight(apply(m, wa)) == weight(wa));
        CHECK(distance(apply(m, wa), apply(m, wb)) == distance(wa, wb));
        CHECK(nonzero_agreement(apply(m, wa), apply(m, wb)) ==
              nonzero_agreement(wa, wb));
    }
}

TEST_CASE("validate rejects malformed maps") {
    auto m = EquivalenceMap::identity(3, 3);
    m.coord_perm = {0, 0, 2};  // not a permutation
    CHECK_THROWS_AS(m.validate(), invalid_params);

    auto s = EquivalenceMap::identity(3, 3);
    s.symbol_perms[1] = {1, 0, 2};  // moves zero
    CHECK_THROWS_AS(s.validate(), invalid_params);

    auto d = EquivalenceMap::identity(3, 3);
    d.symbol_perms.pop_back();  // wrong arity
    CHECK_THROWS_AS(d.validate(), invalid_params);
}

TEST_CASE("inverse and composition round-trip") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const int q = 3 + static_cast<int>(rng() % 4);
        auto m = random_map(rng, n, q);
        auto id = m.then(m.inverse());
        id.validate();
        std::vector<Symbol> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = static_cast<Symbol>(rng() % static_cast<unsigned>(q));
        Word w(std::move(v), q);
        CHECK(apply(id, w) == w);
        CHECK(apply(m.inverse(), apply(m, w)) == w);
        // Composition order: this map first, then the second.
        auto m2 = random_map(rng, n, q);
        CHECK(apply(m.then(m2), w) == apply(m2, apply(m, w)));
    }
}

TEST_CASE("a permuted copy is equivalent, with a checked witness") {
    std::mt19937 rng(555);
    auto c = construct_F(FamilyParams(3, 5, 2, 1, 0));
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_map(rng, 5, 3);
        auto image = apply(m, c);
        auto res = are_equivalent(c, image);
        REQUIRE(res.equivalent);
        REQUIRE(res.witness.has_value());
        CHECK(apply(*res.witness, c) == image);
    }
}

TEST_CASE("agreement multisets separate inequivalent sets") {
    auto c1 = set_of({{1, 1, 0}, {0, 1, 1}}, 3, 3, 2);  // agreement 1 on the pair
    auto c2 = set_of({{1, 1, 0}, {2, 2, 0}}, 3, 3, 2);  // agreement 0
    auto res = are_equivalent(c1, c2);
    CHECK_FALSE(res.equivalent);
    CHECK_FALSE(res.witness.has_value());
    // Same distance multiset {2}, so the separation came from agreements.
    CHECK(distance(c1.word(0), c1.word(1)) == 2);
    CHECK(distance(c2.word(0), c2.word(1)) == 2);
}

TEST_CASE("mismatched spaces cannot be compared") {
    auto c1 = set_of({{1, 1, 0}}, 3, 3, 2);
    auto c2 = set_of({{1, 1, 0, 0}}, 4, 3, 2);
    CHECK_THROWS_AS(are_equivalent(c1, c2), dimension_mismatch);
}

TEST_CASE("canonical bytes are invariant across the class") {
    std::mt19937 rng(2024);
    for (const auto& p : {FamilyParams(3, 5, 2, 1, 0), FamilyParams(4, 4, 2, 1, 1)}) {
        auto c = construct_A_eps(p);
        const auto base = canonical_form(c).bytes;
        for (int trial = 0; trial < 20; ++trial) {
            auto image = apply(random_map(rng, p.n, p.q), c);
            CHECK(canonical_form(image).bytes == base);
        }
    }
}

TEST_CASE("canonical hex is stable across runs and processes") {
    auto c = construct_F(FamilyParams(3, 5, 2, 1, 0));
    // Golden value; any change to it is a breaking change to stored hashes.
    CHECK(canonical_hex(c) ==
          "4143460105030102000000080000000000000102000000000102"
          "0000000001020000000001010101010101010102000000000000");
}

TEST_CASE("global symbol mode is a strictly smaller group") {
    // (1, 2) maps to (1, 1) per-coordinate, but no single shared symbol
    // permutation can send the two distinct symbols to one.
    auto c1 = set_of({{1, 2}}, 2, 3, 2);
    auto c2 = set_of({{1, 1}}, 2, 3, 2);
    CHECK(are_equivalent(c1, c2).equivalent);
    CanonConfig global;
    global.mode = SymbolMode::global;
    CHECK_FALSE(are_equivalent(c1, c2, global).equivalent);
    // Coordinate permutations still act in global mode.
    auto c3 = set_of({{0, 1, 2}}, 3, 3, 2);
    auto c4 = set_of({{2, 1, 0}}, 3, 3, 2);
    auto res = are_equivalent(c3, c4, global);
    CHECK(res.equivalent);
    REQUIRE(res.witness.has_value());
    CHECK(apply(*res.witness, c3) == c4);
}

TEST_CASE("canonicalization refuses oversized alphabets") {
    auto c = set_of({{1, 1, 0}}, 3, 9, 2);
    CHECK_THROWS_AS(canonical_form(c), resource_limit);
    CanonConfig wide;
    wide.max_alphabet = 9;  // opts into enumerating 8! symbol permutations
    CHECK_NOTHROW(canonical_form(c, wide));
}

TEST_CASE("uniqueness: the odd-diameter construction is the lone class") {
    auto rep = uniqueness_check(FamilyParams(4, 5, 2, 1, 1), Family::A_eps);
    CHECK(rep.construction_size == 3);
    CHECK(rep.optimum == 3);
    CHECK(rep.construction_is_optimum);
    CHECK(rep.census_count == 60);
    CHECK(rep.num_classes == 1);
    CHECK(rep.construction_among_optima);
    CHECK(rep.all_optima_match_construction);
    CHECK(std::accumulate(rep.class_sizes.begin(), rep.class_sizes.end(),
                          std::uint64_t{0}) == 60);
}

TEST_CASE("uniqueness: the prefix family is the lone class at n = 7") {
    auto rep = uniqueness_check(FamilyParams(3, 7, 2, 1, 0), Family::F);
    CHECK(rep.optimum == 12);
    CHECK(rep.census_count == 14);
    CHECK(rep.num_classes == 1);
    CHECK(rep.all_optima_match_construction);
}

TEST_CASE("uniqueness at the boundary n = 2k: still one class for q = 3") {
    auto rep = uniqueness_check(FamilyParams(3, 4, 2, 1, 0), Family::F);
    CHECK(rep.optimum == 6);
    CHECK(rep.census_count == 8);
    CHECK(rep.num_classes == 1);
    CHECK(rep.construction_among_optima);
}

TEST_CASE("uniqueness can fail: binary boundary has two classes") {
    // At q = 2, n = 2k the star is tied by the triangle-style optima, which
    // are not images of the prefix family.
    auto rep = uniqueness_check(FamilyParams(2, 4, 2, 1, 0), Family::F);
    CHECK(rep.optimum == 3);
    CHECK(rep.census_count == 8);
    CHECK(rep.num_classes == 2);
    CHECK(rep.construction_among_optima);
    CHECK_FALSE(rep.all_optima_match_construction);
    // Four stars and four triangles.
    std::vector<std::uint64_t> sizes = rep.class_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{4, 4});
}

TEST_CASE("uniqueness respects the search budget") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    CHECK_THROWS_AS(uniqueness_check(FamilyParams(3, 7, 2, 1, 0), Family::F, tiny),
                    resource_limit);
}
