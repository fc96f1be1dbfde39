#include "anticode/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "anticode/constructions.hpp"
#include "anticode/equivalence.hpp"
#include "anticode/errors.hpp"
#include "anticode/hierarchy.hpp"
#include "anticode/search.hpp"
#include "anticode/verify.hpp"
#include "json.hpp"

namespace anticode {

namespace {

using nlohmann::json;

json load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_params("cannot open grid manifest: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw invalid_params("grid manifest is not valid JSON (" + path + "): " + e.what());
    }
}

struct Ctx {
    json manifest;
    SuiteOptions opts;

    VerifyConfig verify_cfg() const {
        VerifyConfig cfg;
        cfg.budget_symbol_comparisons =
            opts.pair_budget.value_or(manifest.value("pair_budget", cfg.budget_symbol_comparisons));
        cfg.workers = opts.workers;
        return cfg;
    }

    SearchBudget search_budget() const {
        SearchBudget b;
        if (manifest.contains("search")) {
            const auto& s = manifest.at("search");
            b.max_nodes = s.value("max_nodes", b.max_nodes);
            b.max_seconds = s.value("max_seconds", b.max_seconds);
        }
        return b;
    }

    std::uint64_t seed() const {
        return opts.seed.value_or(manifest.value("seed", std::uint64_t{1}));
    }
};

struct GridSpec {
    std::vector<int> qs;
    int k_max = 0;
    int n_max = 0;
};

GridSpec grid_spec(const json& j) {
    GridSpec g;
    g.qs = j.at("q").get<std::vector<int>>();
    g.k_max = j.at("k_max").get<int>();
    g.n_max = j.at("n_max").get<int>();
    return g;
}

/// Iterates the shared parameter grid: every (q, k, t, eps, n) with
/// 1 <= k <= k_max, 0 <= t < k, 0 <= eps <= k-t, 2k-t-eps <= n <= n_max.
void for_grid(const GridSpec& g, const std::function<void(int, int, int, int, int)>& f) {
    for (int q : g.qs)
        for (int k = 1; k <= g.k_max; ++k)
            for (int t = 0; t < k; ++t)
                for (int eps = 0; eps <= k - t; ++eps)
                    for (int n = 2 * k - t - eps; n <= g.n_max; ++n) f(q, k, t, eps, n);
}

std::string cell_name(int q, int k, int t, int eps, int n) {
    std::ostringstream os;
    os << "q=" << q << " k=" << k << " t=" << t << " eps=" << eps << " n=" << n;
    return os.str();
}

struct Tally {
    std::uint64_t cells = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++cells;
        if (!ok && failures++ == 0) first_failure = describe();
    }

    std::string summary(const std::string& what) const {
        std::ostringstream os;
        if (failures == 0) {
            os << cells << " " << what << ", all pass";
        } else {
            os << failures << " of " << cells << " " << what << " failed; first: "
               << first_failure;
        }
        return os.str();
    }

    bool pass() const { return failures == 0; }
};

SpaceParams space_from(const json& j) {
    return SpaceParams(j.at("n").get<int>(), j.at("q").get<int>(), j.at("k").get<int>());
}

// --- criterion 1: construction sizes match the closed form ----------------

CriterionResult run_formulas(const Ctx& ctx) {
    CriterionResult r;
    r.id = 1;
    r.name = "formulas";
    Tally tally;
    for_grid(grid_spec(ctx.manifest.at("grid")), [&](int q, int k, int t, int eps, int n) {
        const FamilyParams p(q, n, k, t, eps);
        const CodeSet c = construct_A_eps(p);
        const Bigint expect = size_formula(p);
        tally.record(Bigint(c.size()) == expect, [&] {
            return cell_name(q, k, t, eps, n) + ": size " + std::to_string(c.size()) +
                   " != formula " + expect.str();
        });
    });
    r.pass = tally.pass();
    r.detail = tally.summary("grid cells (exact size match)");
    return r;
}

// --- criterion 2: measured diameters match the closed form ----------------

CriterionResult run_diameters(const Ctx& ctx) {
    CriterionResult r;
    r.id = 2;
    r.name = "diameters";
    Tally tally;
    const VerifyConfig cfg = ctx.verify_cfg();
    for_grid(grid_spec(ctx.manifest.at("grid")), [&](int q, int k, int t, int eps, int n) {
        const FamilyParams p(q, n, k, t, eps);
        const CodeSet c = construct_A_eps(p);
        const int measured = diameter(c, cfg);
        tally.record(measured == p.target_diameter(), [&] {
            return cell_name(q, k, t, eps, n) + ": diameter " + std::to_string(measured) +
                   " != " + std::to_string(p.target_diameter());
        });
    });
    r.pass = tally.pass();
    r.detail = tally.summary("grid cells (exact diameter match)");
    return r;
}

// --- criterion 3: prefix families are t-intersecting -----------------------

CriterionResult run_intersecting(const Ctx& ctx) {
    CriterionResult r;
    r.id = 3;
    r.name = "intersecting";
    Tally tally;
    const VerifyConfig cfg = ctx.verify_cfg();
    const GridSpec g = grid_spec(ctx.manifest.at("grid"));
    // The family has no eps, so the grid collapses to its (q, k, t, n)
    // projection; n runs over the union of the per-eps ranges, [k, n_max].
    for (int q : g.qs)
        for (int k = 1; k <= g.k_max; ++k)
            for (int t = 0; t < k; ++t)
                for (int n = k; n <= g.n_max; ++n) {
                    const FamilyParams p(q, n, k, t, 0);
                    const CodeSet c = construct(Family::F, p);
                    const auto report = is_t_intersecting(c, t, cfg);
                    tally.record(report.pass, [&] {
                        std::string s = cell_name(q, k, t, 0, n) + ": " + report.note;
                        if (report.witness)
                            s += " at rows " + std::to_string(report.witness->row_i) + "," +
                                 std::to_string(report.witness->row_j);
                        return s;
                    });
                }
    r.pass = tally.pass();
    r.detail = tally.summary("grid cells (pairwise agreement >= t)");
    return r;
}

// --- criteria 4-7: exhaustive optimality at desk scale ---------------------

/// Shared shape: run a search, demand a proved optimum of the expected size
/// and a witness that actually satisfies the defining predicate.
CriterionResult check_search(CriterionResult r, const SearchReport& s, std::uint64_t expect,
                             const std::function<std::string(const CodeSet&)>& witness_flaw) {
    std::ostringstream os;
    os << s.problem << ": optimum " << s.optimum << " (expected " << expect << ")";
    bool ok = s.proved_optimal && s.optimum == expect;
    if (!s.proved_optimal) os << "; search hit a budget before proving optimality";
    if (!s.witness) {
        ok = false;
        os << "; no witness returned";
    } else {
        const std::string flaw = witness_flaw(*s.witness);
        if (s.witness->size() != s.optimum || !flaw.empty()) {
            ok = false;
            os << "; witness invalid" << (flaw.empty() ? "" : ": " + flaw);
        }
    }
    os << "; " << s.nodes << " nodes";
    r.pass = ok;
    r.detail = os.str();
    return r;
}

CriterionResult run_maximality_even(const Ctx& ctx) {
    CriterionResult r;
    r.id = 4;
    r.name = "maximality-even";
    const auto& j = ctx.manifest.at("maximality_even");
    const SpaceParams space = space_from(j.at("space"));
    const int D = j.at("D").get<int>();
    const auto expect = j.at("expect").get<std::uint64_t>();
    const VerifyConfig cfg = ctx.verify_cfg();
    const auto s = max_anticode(space, D, SearchMode::one_optimum, ctx.search_budget());
    r = check_search(std::move(r), s, expect, [&](const CodeSet& w) {
        return within_diameter(w, D, cfg).pass ? "" : "diameter exceeds " + std::to_string(D);
    });
    // The instance must sit above the guaranteed-maximality threshold.
    const auto& th = j.at("sufficient");
    const Bigint bound = sufficient_n(th.at("q").get<int>(), th.at("t").get<int>(),
                                      th.at("k").get<int>(),
                                      th.at("parity").get<std::string>() == "odd"
                                          ? DiameterParity::odd
                                          : DiameterParity::even);
    const Bigint th_expect = th.at("expect").get<std::int64_t>();
    if (bound != th_expect) {
        r.pass = false;
        r.detail += "; threshold " + bound.str() + " != expected " + th_expect.str();
    } else if (Bigint(space.n) <= bound) {
        r.pass = false;
        r.detail += "; n=" + std::to_string(space.n) + " not above threshold " + bound.str();
    } else {
        r.detail += "; n=" + std::to_string(space.n) + " > threshold " + bound.str();
    }
    return r;
}

CriterionResult run_maximality_odd(const Ctx& ctx) {
    CriterionResult r;
    r.id = 5;
    r.name = "maximality-odd";
    const auto& j = ctx.manifest.at("maximality_odd");
    const SpaceParams space = space_from(j.at("space"));
    const int D = j.at("D").get<int>();
    const VerifyConfig cfg = ctx.verify_cfg();
    const auto s = max_anticode(space, D, SearchMode::one_optimum, ctx.search_budget());
    return check_search(std::move(r), s, j.at("expect").get<std::uint64_t>(),
                        [&](const CodeSet& w) {
                            return within_diameter(w, D, cfg).pass
                                       ? ""
                                       : "diameter exceeds " + std::to_string(D);
                        });
}

CriterionResult run_family_maximality(const Ctx& ctx) {
    CriterionResult r;
    r.id = 6;
    r.name = "family-maximality";
    const VerifyConfig cfg = ctx.verify_cfg();
    bool all = true;
    std::string detail;
    for (const auto& j : ctx.manifest.at("family_maximality")) {
        const SpaceParams space = space_from(j.at("space"));
        const int t = j.at("t").get<int>();
        const auto s =
            max_intersecting_family(space, t, SearchMode::one_optimum, ctx.search_budget());
        CriterionResult one = check_search({}, s, j.at("expect").get<std::uint64_t>(),
                                           [&](const CodeSet& w) {
                                               return is_t_intersecting(w, t, cfg).pass
                                                          ? ""
                                                          : "a pair agrees on fewer than t";
                                           });
        all = all && one.pass;
        if (!detail.empty()) detail += " | ";
        detail += one.detail;
    }
    r.pass = all;
    r.detail = detail;
    return r;
}

CriterionResult run_unrestricted(const Ctx& ctx) {
    CriterionResult r;
    r.id = 7;
    r.name = "unrestricted";
    const auto& j = ctx.manifest.at("unrestricted");
    const int n = j.at("n").get<int>(), q = j.at("q").get<int>(), D = j.at("D").get<int>();
    const VerifyConfig cfg = ctx.verify_cfg();
    const auto s = max_anticode_unrestricted(n, q, D, SearchMode::one_optimum,
                                             ctx.search_budget());
    return check_search(std::move(r), s, j.at("expect").get<std::uint64_t>(),
                        [&](const CodeSet& w) {
                            return within_diameter(w, D, cfg).pass
                                       ? ""
                                       : "diameter exceeds " + std::to_string(D);
                        });
}

// --- criterion 8: census + canonical forms --------------------------------

CriterionResult run_uniqueness(const Ctx& ctx) {
    CriterionResult r;
    r.id = 8;
    r.name = "uniqueness";
    bool all = true;
    std::string detail;
    for (const auto& j : ctx.manifest.at("uniqueness")) {
        const FamilyParams p(j.at("q").get<int>(), j.at("n").get<int>(), j.at("k").get<int>(),
                             j.at("t").get<int>(), j.at("eps").get<int>());
        const auto family = family_from_string(j.at("family").get<std::string>());
        if (!family) throw invalid_params("unknown family tag in manifest");
        const auto rep = uniqueness_check(p, *family, ctx.search_budget());
        const auto min_classes = j.at("min_classes").get<std::uint64_t>();
        const auto max_classes =
            j.value("max_classes", std::numeric_limits<std::uint64_t>::max());
        bool ok = rep.construction_is_optimum && rep.construction_among_optima &&
                  rep.num_classes >= min_classes && rep.num_classes <= max_classes;
        std::ostringstream os;
        os << rep.problem << " at " << cell_name(p.q, p.k, p.t, p.eps, p.n) << ": "
           << rep.census_count << " optima in " << rep.num_classes << " classes (expected ";
        if (max_classes == std::numeric_limits<std::uint64_t>::max())
            os << ">= " << min_classes;
        else if (min_classes == max_classes)
            os << min_classes;
        else
            os << min_classes << ".." << max_classes;
        os << ")";
        if (!rep.construction_is_optimum) os << "; construction not optimal";
        if (rep.construction_is_optimum && !rep.construction_among_optima)
            os << "; construction missing from the census classes";
        os << (ok ? "" : " -- FAIL");
        all = all && ok;
        if (!detail.empty()) detail += " | ";
        detail += os.str();
    }
    r.pass = all;
    r.detail = detail;
    return r;
}

// --- criterion 9: the size product bound -----------------------------------

/// All weight-2 words whose two nonzero symbols are equal. Any two distinct
/// such words differ in at least two coordinates, and the count is
/// binom(n,2)(q-1), which pairs exactly with the (q-1)-word diameter-1
/// anticode {1 a 0...0} to meet the product bound with zero slack.
CodeSet diagonal_code(const SpaceParams& space) {
    std::vector<Word> words;
    for (int i = 0; i < space.n; ++i)
        for (int j = i + 1; j < space.n; ++j)
            for (int a = 1; a < space.q; ++a) {
                std::vector<Symbol> v(static_cast<std::size_t>(space.n), 0);
                v[static_cast<std::size_t>(i)] = static_cast<Symbol>(a);
                v[static_cast<std::size_t>(j)] = static_cast<Symbol>(a);
                words.emplace_back(std::move(v), space.q);
            }
    return CodeSet::from_words(space, true, SetKind::code, words);
}

CodeSet pair_anticode(const SpaceParams& space) {
    std::vector<Word> words;
    for (int a = 1; a < space.q; ++a) {
        std::vector<Symbol> v(static_cast<std::size_t>(space.n), 0);
        v[0] = 1;
        v[1] = static_cast<Symbol>(a);
        words.emplace_back(std::move(v), space.q);
    }
    return CodeSet::from_words(space, true, SetKind::anticode, words);
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t m) {
    // Rejection keeps the draw uniform and identical across platforms.
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % m;
}

/// Largest prefix-family anticode with the given target diameter, or a
/// singleton when no ladder entry fits.
CodeSet best_partner_anticode(const SpaceParams& space, int target) {
    std::optional<FamilyParams> best;
    Bigint best_size = -1;
    for (int t = 0; t < space.k; ++t) {
        const int eps = 2 * (space.k - t) - target;
        if (eps < 0 || eps > space.k - t) continue;
        const FamilyParams p(space.q, space.n, space.k, t, eps);
        if (!p.diameter_applicable()) continue;
        const Bigint size = size_formula(p);
        if (size > best_size) {
            best_size = size;
            best = p;
        }
    }
    if (best) return construct_A_eps(*best);
    std::vector<Symbol> v(static_cast<std::size_t>(space.n), 0);
    for (int i = 0; i < space.k; ++i) v[static_cast<std::size_t>(i)] = 1;
    return CodeSet::from_words(space, true, SetKind::anticode, {Word(std::move(v), space.q)});
}

CriterionResult run_bound(const Ctx& ctx) {
    CriterionResult r;
    r.id = 9;
    r.name = "bound";
    const auto& j = ctx.manifest.at("bound");
    const SpaceParams space = space_from(j.at("space"));
    const VerifyConfig cfg = ctx.verify_cfg();
    std::ostringstream os;
    bool ok = true;

    const CodeSet code = diagonal_code(space);
    const CodeSet partner = pair_anticode(space);
    const int d = min_distance(code, cfg);
    const int diam = diameter(partner, cfg);
    const auto bc = code_anticode_bound(code.size(), partner.size(), space);
    const Bigint expect_product = j.at("expect_product").get<std::int64_t>();
    os << "pinned pairing: |C|=" << code.size() << " d=" << d << ", |A|=" << partner.size()
       << " diameter=" << diam << ", product " << bc.lhs.str() << " vs bound "
       << bc.rhs.str() << " (slack " << bc.slack.str() << ")";
    if (d != 2 || diam != 1 || !bc.holds || !bc.diameter_perfect ||
        bc.lhs != expect_product) {
        ok = false;
        os << " -- FAIL";
    }

    const GridSpec g = grid_spec(ctx.manifest.at("grid"));
    const auto trials = j.at("random_trials").get<int>();
    const auto max_subcode = j.at("max_subcode").get<std::uint64_t>();
    std::mt19937_64 rng(ctx.seed());
    Bigint min_slack = -1;
    int violations = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int q = g.qs[rand_below(rng, g.qs.size())];
        const int k = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(g.k_max)));
        const int n = k + static_cast<int>(rand_below(
                              rng, static_cast<std::uint64_t>(g.n_max - k + 1)));
        const SpaceParams trial_space(n, q, k);
        const auto universe = enumerate_constant_weight(trial_space);
        const std::uint64_t total = universe.size();
        const std::uint64_t cap = std::min(max_subcode, total);
        const std::uint64_t m = 2 + rand_below(rng, cap - 1);
        std::set<std::uint64_t> picked;
        while (picked.size() < m) picked.insert(rand_below(rng, total));
        std::vector<Word> chosen;
        chosen.reserve(m);
        for (std::uint64_t idx : picked) chosen.push_back(universe[idx]);
        const CodeSet sub = CodeSet::from_words(trial_space, true, SetKind::code, chosen);
        const int dist = min_distance(sub, cfg);
        const CodeSet anti = best_partner_anticode(trial_space, dist - 1);
        const int anti_diam = anti.size() < 2 ? 0 : diameter(anti, cfg);
        const auto check = code_anticode_bound(sub.size(), anti.size(), trial_space);
        if (anti_diam > dist - 1 || !check.holds) ++violations;
        if (min_slack < 0 || check.slack < min_slack) min_slack = check.slack;
    }
    os << "; " << trials << " seeded subcode pairings: " << violations
       << " violations, min slack " << min_slack.str();
    if (violations != 0) ok = false;

    r.pass = ok;
    r.detail = os.str();
    return r;
}

// --- criterion 10: ladder comparisons match their threshold ----------------

CriterionResult run_crossover(const Ctx& ctx) {
    CriterionResult r;
    r.id = 10;
    r.name = "crossover";
    const auto& j = ctx.manifest.at("crossover");
    const int q_lo = j.at("q_lo").get<int>(), q_hi = j.at("q_hi").get<int>();
    const int k_max = j.at("k_max").get<int>(), n_max = j.at("n_max").get<int>();
    Tally tally;
    for (int q = q_lo; q <= q_hi; ++q)
        for (int k = 2; k <= k_max; ++k)
            for (int t = 1; t < k; ++t)
                for (int eps = 0; eps <= k - t - 1; ++eps)
                    for (int n = 2 * k - t - eps; n <= n_max; ++n) {
                        const auto cmp = compare_pair(q, n, k, t, eps);
                        tally.record(cmp.matches_threshold, [&] {
                            return cell_name(q, k, t, eps, n) + ": " + to_string(cmp.winner) +
                                   " (" + cmp.pred_size.str() + " vs " + cmp.succ_size.str() +
                                   ") disagrees with threshold n=" +
                                   std::to_string(cmp.threshold_n);
                        });
                    }
    const auto& tie = j.at("tie");
    const auto cmp = compare_pair(tie.at("q").get<int>(), tie.at("n").get<int>(),
                                  tie.at("k").get<int>(), tie.at("t").get<int>(),
                                  tie.at("eps").get<int>());
    const Bigint tie_expect = tie.at("expect").get<std::int64_t>();
    tally.record(cmp.winner == Winner::tie && cmp.pred_size == tie_expect &&
                     cmp.succ_size == tie_expect,
                 [&] {
                     return "pinned tie: got " + to_string(cmp.winner) + " (" +
                            cmp.pred_size.str() + " vs " + cmp.succ_size.str() +
                            "), expected tie at " + tie_expect.str();
                 });
    r.pass = tally.pass();
    r.detail = tally.summary("ladder comparisons (sign vs threshold, incl. the pinned tie)");
    return r;
}

// --- dispatch ---------------------------------------------------------------

using Runner = CriterionResult (*)(const Ctx&);

struct SuiteEntry {
    const char* name;
    Runner run;
};

constexpr SuiteEntry kSuites[] = {
    {"formulas", run_formulas},
    {"diameters", run_diameters},
    {"intersecting", run_intersecting},
    {"maximality-even", run_maximality_even},
    {"maximality-odd", run_maximality_odd},
    {"family-maximality", run_family_maximality},
    {"unrestricted", run_unrestricted},
    {"uniqueness", run_uniqueness},
    {"bound", run_bound},
    {"crossover", run_crossover},
};

CriterionResult run_timed(const SuiteEntry& entry, const Ctx& ctx) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = entry.run(ctx);
    } catch (const std::exception& e) {
        // A criterion that cannot even run is a failed criterion, reported
        // rather than escalated, so the rest of the suite still executes.
        r.name = entry.name;
        r.id = static_cast<int>(&entry - kSuites) + 1;
        r.pass = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kSuites) v.emplace_back(e.name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

std::string default_manifest_path() {
#ifdef ANTICODE_DEFAULT_MANIFEST
    return ANTICODE_DEFAULT_MANIFEST;
#else
    return "";
#endif
}

SuiteReport run_suite(const std::string& name, const std::string& manifest_path,
                      const SuiteOptions& opts) {
    Ctx ctx{load_manifest(manifest_path.empty() ? default_manifest_path() : manifest_path),
            opts};
    SuiteReport report;
    report.suite = name;
    bool matched = false;
    for (const auto& entry : kSuites) {
        if (name == "all" || name == entry.name) {
            matched = true;
            report.criteria.push_back(run_timed(entry, ctx));
        }
    }
    if (!matched) throw invalid_params("unknown suite: " + name);
    report.all_pass = std::all_of(report.criteria.begin(), report.criteria.end(),
                                  [](const CriterionResult& c) { return c.pass; });
    return report;
}

}  // namespace anticode
