#include "anticode/verify.hpp"

#include "anticode/errors.hpp"
#include "anticode/pairwise.hpp"

#include <algorithm>
#include <string>

namespace anticode {

namespace {

void guard_budget(const CodeSet& c, const VerifyConfig& cfg) {
    const Bigint m = c.size();
    const Bigint cost = m * (m - 1) / 2 * c.params().n;
    if (cost > cfg.budget_symbol_comparisons)
        throw resource_limit("pairwise scan exceeds the symbol-comparison budget",
                             cost.str());
}

pairwise::ScanResult run_max(const CodeSet& c, pairwise::Stat s, int stop_at,
                             const VerifyConfig& cfg) {
    if (cfg.workers == 1) return pairwise::serial::max_scan(c, s, stop_at);
    return pairwise::max_scan(c, s, stop_at, cfg.workers);
}

pairwise::ScanResult run_min(const CodeSet& c, pairwise::Stat s, int stop_at,
                             const VerifyConfig& cfg) {
    if (cfg.workers == 1) return pairwise::serial::min_scan(c, s, stop_at);
    return pairwise::min_scan(c, s, stop_at, cfg.workers);
}

pairwise::ViolationResult run_below(const CodeSet& c, pairwise::Stat s, int threshold,
                                    const VerifyConfig& cfg) {
    if (cfg.workers == 1) return pairwise::serial::first_below(c, s, threshold);
    return pairwise::first_below(c, s, threshold, cfg.workers);
}

pairwise::ViolationResult run_above(const CodeSet& c, pairwise::Stat s, int threshold,
                                    const VerifyConfig& cfg) {
    if (cfg.workers == 1) return pairwise::serial::first_above(c, s, threshold);
    return pairwise::first_above(c, s, threshold, cfg.workers);
}

PairWitness make_witness(const CodeSet& c, std::size_t i, std::size_t j, int value) {
    return PairWitness{i + 1, j + 1, c.word(i), c.word(j), value};
}

/// Distance between two rows never exceeds n minus the number of
/// coordinates on which the whole set agrees; for constant-weight sets it
/// also never exceeds 2k - S - T, where S counts coordinates nonzero in
/// every word and T those carrying the same nonzero symbol in every word.
/// Both facts are measured on the set itself, so using them to stop a scan
/// early never assumes what a caller wants verified.
int structural_distance_bound(const CodeSet& c) {
    const int n = c.params().n;
    const std::size_t m = c.size();
    if (m == 0) return 0;
    int all_agree = 0, all_nonzero = 0, all_equal_nonzero = 0;
    for (int col = 0; col < n; ++col) {
        const Symbol first = c.row(0)[static_cast<std::size_t>(col)];
        bool agree = true, nonzero = first != 0;
        for (std::size_t i = 1; i < m && (agree || nonzero); ++i) {
            const Symbol v = c.row(i)[static_cast<std::size_t>(col)];
            agree = agree && v == first;
            nonzero = nonzero && v != 0;
        }
        all_agree += agree;
        all_nonzero += nonzero;
        all_equal_nonzero += agree && nonzero;
    }
    int bound = n - all_agree;
    if (c.constant_weight())
        bound = std::min(bound, 2 * c.params().k - all_nonzero - all_equal_nonzero);
    return std::max(bound, 0);
}

}  // namespace

VerificationReport is_t_intersecting(const CodeSet& c, int t, const VerifyConfig& cfg) {
    if (t < 0) throw invalid_params("intersection level t must be nonnegative");
    VerificationReport r;
    r.property = "intersecting(t=" + std::to_string(t) + ")";
    if (t == 0) {
        r.pass = true;
        r.note = "trivially satisfied at t=0";
        return r;
    }
    if (c.size() < 2) {
        r.pass = true;
        r.note = "fewer than two words";
        return r;
    }
    guard_budget(c, cfg);
    const auto v = run_below(c, pairwise::Stat::agreement, t, cfg);
    if (v.found) {
        r.pass = false;
        r.witness = make_witness(c, v.i, v.j, v.value);
        r.note = "pair with too few equal nonzero coordinates";
    } else {
        r.pass = true;
        if (v.extreme_valid) r.measured = v.extreme;
    }
    return r;
}

int diameter(const CodeSet& c, const VerifyConfig& cfg) {
    if (c.empty()) throw undefined_input("diameter of an empty set");
    if (c.size() == 1) return 0;
    guard_budget(c, cfg);
    const int stop = structural_distance_bound(c);
    const auto s = run_max(c, pairwise::Stat::distance, stop, cfg);
    return s.extreme;
}

int min_distance(const CodeSet& c, const VerifyConfig& cfg) {
    if (c.size() < 2) throw undefined_input("minimum distance needs at least two words");
    guard_budget(c, cfg);
    // Distinct words differ somewhere, so 1 is a sound lower bound.
    const auto s = run_min(c, pairwise::Stat::distance, 1, cfg);
    return s.extreme;
}

VerificationReport within_diameter(const CodeSet& c, int D, const VerifyConfig& cfg) {
    if (D < 0) throw invalid_params("diameter bound must be nonnegative");
    VerificationReport r;
    r.property = "within-diameter(D=" + std::to_string(D) + ")";
    if (c.size() < 2) {
        r.pass = true;
        r.note = "fewer than two words";
        return r;
    }
    guard_budget(c, cfg);
    const auto v = run_above(c, pairwise::Stat::distance, D, cfg);
    if (v.found) {
        r.pass = false;
        r.witness = make_witness(c, v.i, v.j, v.value);
        r.note = "pair beyond the diameter bound";
    } else {
        r.pass = true;
        if (v.extreme_valid) r.measured = v.extreme;
    }
    return r;
}

BoundCheck code_anticode_bound(const Bigint& code_size, const Bigint& anticode_size,
                               const SpaceParams& p) {
    if (code_size < 0 || anticode_size < 0)
        throw invalid_params("sizes must be nonnegative");
    BoundCheck b;
    b.lhs = code_size * anticode_size;
    b.rhs = p.word_count();
    b.slack = b.rhs - b.lhs;
    b.holds = b.slack >= 0;
    b.diameter_perfect = b.slack == 0;
    return b;
}

namespace {

VerificationReport report_equal(const std::string& property, const Bigint& measured,
                                const Bigint& expected) {
    VerificationReport r;
    r.property = property;
    r.pass = measured == expected;
    r.note = "measured " + measured.str() + ", formula " + expected.str();
    return r;
}

}  // namespace

ConstructionReport check_construction(const FamilyParams& p, Family family,
                                      const VerifyConfig& cfg, std::uint64_t max_words) {
    ConstructionReport rep{family, p, {}, false};
    const CodeSet set = construct(family, p, max_words);
    rep.checks.push_back(report_equal("size", set.size(), family_size_formula(family, p)));

    {
        VerificationReport r;
        r.property = "weight";
        r.pass = true;
        for (std::size_t i = 0; i < set.size() && r.pass; ++i)
            r.pass = weight(set.word(i)) == p.k;
        rep.checks.push_back(std::move(r));
    }

    if (family != Family::zero_prefix) {
        VerificationReport r;
        r.property = "prefix-all-ones";
        r.pass = true;
        for (std::size_t i = 0; i < set.size() && r.pass; ++i) {
            auto row = set.row(i);
            for (int c = 0; c < p.t; ++c)
                if (row[static_cast<std::size_t>(c)] != 1) r.pass = false;
        }
        rep.checks.push_back(std::move(r));
        const int eps = family == Family::A ? 1 : (family == Family::F ? 0 : p.eps);
        if (eps > 0) {
            VerificationReport s;
            s.property = "middle-segment-nonzero";
            s.pass = true;
            for (std::size_t i = 0; i < set.size() && s.pass; ++i) {
                auto row = set.row(i);
                for (int c = p.t; c < p.t + eps; ++c)
                    if (row[static_cast<std::size_t>(c)] == 0) s.pass = false;
            }
            rep.checks.push_back(std::move(s));
        }
    } else {
        VerificationReport r;
        r.property = "prefix-all-zeros";
        r.pass = true;
        for (std::size_t i = 0; i < set.size() && r.pass; ++i) {
            auto row = set.row(i);
            for (int c = 0; c < p.t; ++c)
                if (row[static_cast<std::size_t>(c)] != 0) r.pass = false;
        }
        rep.checks.push_back(std::move(r));
    }

    {
        VerificationReport r;
        r.property = "diameter";
        const auto formula = family_diameter_formula(family, p);
        if (set.size() < 2) {
            r.pass = true;
            r.measured = 0;
            r.note = "degenerate set; nothing to compare";
        } else if (formula) {
            const int measured = diameter(set, cfg);
            r.measured = measured;
            r.pass = measured == *formula;
            r.note = "formula " + std::to_string(*formula);
        } else {
            r.pass = true;
            r.measured = diameter(set, cfg);
            r.note = "formula inapplicable at these parameters; measured value reported";
        }
        rep.checks.push_back(std::move(r));
    }

    if (family == Family::F) rep.checks.push_back(is_t_intersecting(set, p.t, cfg));

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const VerificationReport& r) { return r.pass; });
    return rep;
}

}  // namespace anticode
