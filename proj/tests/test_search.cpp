#include <algorithm>
#include <set>

#include "anticode/constructions.hpp"
#include "anticode/errors.hpp"
#include "anticode/search.hpp"
#include "anticode/verify.hpp"
#include "doctest.h"

using namespace anticode;

namespace {

void check_anticode_witness(const SearchReport& rep, const SpaceParams& space, int D) {
    REQUIRE(rep.witness.has_value());
    const CodeSet& w = *rep.witness;
    CHECK(w.size() == rep.optimum);
    CHECK(w.params() == space);
    if (w.size() >= 2) CHECK(within_diameter(w, D).pass);
}

void check_family_witness(const SearchReport& rep, const SpaceParams& space, int t) {
    REQUIRE(rep.witness.has_value());
    const CodeSet& w = *rep.witness;
    CHECK(w.size() == rep.optimum);
    CHECK(w.params() == space);
    CHECK(is_t_intersecting(w, t).pass);
}

}  // namespace

TEST_CASE("exact anticode optima on small spaces") {
    auto rep = max_anticode(SpaceParams(7, 3, 2), 2, SearchMode::one_optimum);
    CHECK(rep.proved_optimal);
    CHECK(rep.optimum == 12);
    CHECK(rep.universe_size == 84);
    check_anticode_witness(rep, SpaceParams(7, 3, 2), 2);

    auto odd = max_anticode(SpaceParams(5, 4, 2), 1, SearchMode::one_optimum);
    CHECK(odd.proved_optimal);
    CHECK(odd.optimum == 3);
    check_anticode_witness(odd, SpaceParams(5, 4, 2), 1);
}

TEST_CASE("anticode census counts every optimum") {
    auto rep = max_anticode(SpaceParams(7, 3, 2), 2, SearchMode::census);
    REQUIRE(rep.proved_optimal);
    CHECK(rep.optimum == 12);
    REQUIRE(rep.census_count.has_value());
    CHECK(*rep.census_count == 14);
    REQUIRE(rep.optima.size() == 14);
    std::set<std::vector<Symbol>> distinct;
    for (const auto& c : rep.optima) {
        CHECK(c.size() == 12);
        CHECK(within_diameter(c, 2).pass);
        distinct.insert(c.flat());
    }
    CHECK(distinct.size() == 14);

    auto odd = max_anticode(SpaceParams(5, 4, 2), 1, SearchMode::census);
    REQUIRE(odd.proved_optimal);
    CHECK(odd.census_count == 60);
}

TEST_CASE("exact intersecting-family optima on small spaces") {
    auto rep = max_intersecting_family(SpaceParams(7, 3, 2), 1, SearchMode::census);
    CHECK(rep.proved_optimal);
    CHECK(rep.optimum == 12);
    CHECK(rep.census_count == 14);
    check_family_witness(rep, SpaceParams(7, 3, 2), 1);

    auto full_weight = max_intersecting_family(SpaceParams(3, 3, 3), 2, SearchMode::census);
    CHECK(full_weight.proved_optimal);
    CHECK(full_weight.optimum == 2);
    CHECK(full_weight.census_count == 12);

    auto boundary = max_intersecting_family(SpaceParams(4, 3, 2), 1, SearchMode::census);
    CHECK(boundary.proved_optimal);
    CHECK(boundary.optimum == 6);
    CHECK(boundary.census_count == 8);
}

TEST_CASE("unrestricted anticode optima") {
    auto rep = max_anticode_unrestricted(4, 3, 2, SearchMode::census);
    CHECK(rep.proved_optimal);
    CHECK(rep.optimum == 9);
    CHECK(rep.census_count == 135);

    CHECK(max_anticode_unrestricted(4, 3, 0, SearchMode::one_optimum).optimum == 1);
    CHECK(max_anticode_unrestricted(4, 3, 4, SearchMode::one_optimum).optimum == 81);
}

TEST_CASE("trivial regimes admit the whole space") {
    // D >= 2k: every pair of weight-k words is within distance D.
    auto rep = max_anticode(SpaceParams(5, 3, 2), 4, SearchMode::one_optimum);
    CHECK(rep.proved_optimal);
    CHECK(rep.optimum == 40);
    // t = 0: no constraint at all.
    auto fam = max_intersecting_family(SpaceParams(5, 3, 2), 0, SearchMode::one_optimum);
    CHECK(fam.proved_optimal);
    CHECK(fam.optimum == 40);
}

TEST_CASE("optima grow monotonically in D and n") {
    std::uint64_t prev = 0;
    for (int D = 0; D <= 4; ++D) {
        auto rep = max_anticode(SpaceParams(6, 3, 2), D, SearchMode::one_optimum);
        REQUIRE(rep.proved_optimal);
        CHECK(rep.optimum >= prev);
        prev = rep.optimum;
    }
    prev = 0;
    for (int n = 2; n <= 7; ++n) {
        auto rep = max_anticode(SpaceParams(n, 3, 2), 2, SearchMode::one_optimum);
        REQUIRE(rep.proved_optimal);
        CHECK(rep.optimum >= prev);
        prev = rep.optimum;
    }
}

TEST_CASE("search optimum dominates the constructed families") {
    for (int n = 4; n <= 7; ++n) {
        FamilyParams p(3, n, 2, 1, 0);
        auto rep = max_intersecting_family(SpaceParams(n, 3, 2), 1, SearchMode::one_optimum);
        REQUIRE(rep.proved_optimal);
        CHECK(Bigint(rep.optimum) >= size_formula(p));
    }
    for (int n = 5; n <= 7; ++n) {
        FamilyParams p(3, n, 2, 1, 1);
        auto rep = max_anticode(SpaceParams(n, 3, 2), p.target_diameter(),
                                SearchMode::one_optimum);
        REQUIRE(rep.proved_optimal);
        CHECK(Bigint(rep.optimum) >= size_formula(p));
    }
}

TEST_CASE("family optima never exceed the matching anticode optima") {
    // Pairwise agreement >= t forces pairwise distance <= 2(k - t).
    for (int n = 3; n <= 6; ++n) {
        auto fam = max_intersecting_family(SpaceParams(n, 3, 2), 1, SearchMode::one_optimum);
        auto anti = max_anticode(SpaceParams(n, 3, 2), 2, SearchMode::one_optimum);
        REQUIRE(fam.proved_optimal);
        REQUIRE(anti.proved_optimal);
        CHECK(fam.optimum <= anti.optimum);
    }
}

TEST_CASE("node budget aborts honestly") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto rep = max_anticode(SpaceParams(7, 3, 2), 2, SearchMode::one_optimum, tiny);
    CHECK_FALSE(rep.proved_optimal);
    CHECK(rep.nodes >= 1);
    // The best-found witness is still a valid anticode.
    if (rep.witness && rep.witness->size() >= 2) CHECK(within_diameter(*rep.witness, 2).pass);
}

TEST_CASE("universe cap refuses oversized instances") {
    SearchBudget tiny;
    tiny.max_universe = 10;
    CHECK_THROWS_AS(max_anticode(SpaceParams(7, 3, 2), 2, SearchMode::one_optimum, tiny),
                    resource_limit);
}

TEST_CASE("searches are deterministic") {
    auto a = max_anticode(SpaceParams(6, 3, 2), 2, SearchMode::census);
    auto b = max_anticode(SpaceParams(6, 3, 2), 2, SearchMode::census);
    CHECK(a.optimum == b.optimum);
    CHECK(a.nodes == b.nodes);
    CHECK(a.census_count == b.census_count);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("sufficient thresholds match the closed forms") {
    CHECK(sufficient_n(3, 1, 2, DiameterParity::even) == 6);
    CHECK(sufficient_n(4, 1, 2, DiameterParity::odd) == 1);
    CHECK(sufficient_n(3, 0, 2, DiameterParity::even) == 11);
    // Monotone in q for fixed (t, k).
    Bigint prev = 0;
    for (int q = 2; q <= 6; ++q) {
        Bigint cur = sufficient_n(q, 1, 3, DiameterParity::even);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK_THROWS_AS(sufficient_n(1, 1, 2, DiameterParity::even), invalid_params);
    CHECK_THROWS_AS(sufficient_n(3, 2, 2, DiameterParity::even), invalid_params);
}

TEST_CASE("search parameter validation") {
    CHECK_THROWS_AS(max_anticode(SpaceParams(4, 3, 2), -1, SearchMode::one_optimum),
                    invalid_params);
    CHECK_THROWS_AS(max_intersecting_family(SpaceParams(4, 3, 2), -1, SearchMode::one_optimum),
                    invalid_params);
    CHECK_THROWS_AS(max_anticode_unrestricted(4, 3, -1, SearchMode::one_optimum),
                    invalid_params);
    CHECK_THROWS_AS(max_anticode_unrestricted(0, 3, 1, SearchMode::one_optimum),
                    invalid_params);
}
