#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "anticode/constructions.hpp"
#include "anticode/equivalence.hpp"
#include "anticode/errors.hpp"
#include "anticode/hierarchy.hpp"
#include "anticode/search.hpp"
#include "anticode/suites.hpp"
#include "anticode/verify.hpp"
#include "json.hpp"

namespace {

using anticode::Bigint;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // an assertion failed
constexpr int kExitUsage = 2;  // malformed invocation or input
constexpr int kExitBudget = 3;  // a budget stopped the run

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void emit(const std::string& command, const ordered_json& params, const ordered_json& results,
          const ordered_json& timing) {
    const ordered_json doc{
        {"command", command}, {"params", params}, {"results", results}, {"timing", timing}};
    std::cout << doc.dump(2) << "\n";
}

std::string word_text(const anticode::Word& w) {
    std::string s;
    for (int i = 0; i < w.length(); ++i) {
        if (i) s += ' ';
        s += std::to_string(static_cast<int>(w[i]));
    }
    return s;
}

std::string words_text(const anticode::CodeSet& c) {
    std::ostringstream os;
    anticode::write_words(os, c);
    return os.str();
}

ordered_json witness_json(const anticode::PairWitness& w) {
    return {{"rows", {w.row_i, w.row_j}},
            {"words", {word_text(w.a), word_text(w.b)}},
            {"value", w.value}};
}

ordered_json check_json(const anticode::VerificationReport& r) {
    ordered_json j{{"property", r.property}, {"pass", r.pass}};
    if (r.measured) j["measured"] = *r.measured;
    if (r.witness) j["witness"] = witness_json(*r.witness);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json map_json(const anticode::EquivalenceMap& m) {
    ordered_json perms = ordered_json::array();
    for (const auto& p : m.symbol_perms) {
        ordered_json one = ordered_json::array();
        for (auto s : p) one.push_back(static_cast<int>(s));
        perms.push_back(std::move(one));
    }
    return {{"coord_perm", m.coord_perm}, {"symbol_perms", std::move(perms)}};
}

Bigint parse_bigint(const std::string& s) {
    try {
        return Bigint(s);
    } catch (const std::exception&) {
        throw anticode::invalid_params("not an integer: " + s);
    }
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw anticode::invalid_params("range must look like a:b, got: " + s);
    }
}

// ---------------------------------------------------------------------------

struct GlobalArgs {
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t budget_pairs = 0;  // 0 = library default
    std::string format;              // empty = per-subcommand default

    anticode::VerifyConfig verify_cfg() const {
        anticode::VerifyConfig cfg;
        cfg.workers = workers;
        if (budget_pairs) cfg.budget_symbol_comparisons = budget_pairs;
        return cfg;
    }
};

struct ConstructArgs {
    std::string family;
    int q = 0, n = 0, k = 0, t = 0, eps = 0;
    std::string out;
    bool json = false;
    std::uint64_t max_words = 10'000'000;
};

int run_construct(const ConstructArgs& a, const GlobalArgs& g) {
    const auto family = anticode::family_from_string(a.family);
    if (!family) throw anticode::invalid_params("unknown family: " + a.family);
    const anticode::FamilyParams p(a.q, a.n, a.k, a.t, a.eps);
    Timer timer;
    const anticode::CodeSet c = anticode::construct(*family, p, a.max_words);
    if (!a.out.empty()) {
        anticode::write_words_file(a.out, c);
        std::cerr << c.size() << " words written to " << a.out << "\n";
    }
    if (a.json || g.format == "json") {
        ordered_json results{{"family", anticode::to_string(*family)},
                             {"size", c.size()},
                             {"formula_size", anticode::family_size_formula(*family, p).str()}};
        try {
            results["measured_diameter"] = anticode::diameter(c, g.verify_cfg());
        } catch (const anticode::resource_limit& e) {
            results["measured_diameter"] = nullptr;
            results["note"] = std::string("diameter not measured: ") + e.what();
        }
        emit("construct",
             {{"family", anticode::to_string(*family)},
              {"q", p.q},
              {"n", p.n},
              {"k", p.k},
              {"t", p.t},
              {"eps", p.eps}},
             results, {{"seconds", timer.seconds()}});
    } else if (a.out.empty()) {
        anticode::write_words(std::cout, c);
    }
    return kExitPass;
}

struct VerifyArgs {
    std::string in;
    std::optional<int> q, k, t, expect_diameter;
    std::optional<std::uint64_t> expect_size;
    std::string bound_check;  // "n,q,k"
    std::string partner_size = "1";
};

int run_verify(const VerifyArgs& a, const GlobalArgs& g) {
    Timer timer;
    const anticode::CodeSet c =
        a.in.empty() ? anticode::read_words(std::cin, a.q, a.k)
                     : anticode::read_words_file(a.in, a.q, a.k);
    const auto cfg = g.verify_cfg();
    std::vector<anticode::VerificationReport> checks;
    ordered_json extra;
    if (a.t) checks.push_back(anticode::is_t_intersecting(c, *a.t, cfg));
    if (a.expect_diameter) {
        anticode::VerificationReport r;
        r.property = "diameter==" + std::to_string(*a.expect_diameter);
        const int d = anticode::diameter(c, cfg);
        r.measured = d;
        r.pass = d == *a.expect_diameter;
        if (!r.pass) r.note = "measured diameter differs from the expectation";
        checks.push_back(std::move(r));
    }
    if (a.expect_size) {
        anticode::VerificationReport r;
        r.property = "size==" + std::to_string(*a.expect_size);
        r.measured = static_cast<int>(c.size());
        r.pass = c.size() == *a.expect_size;
        if (!r.pass) r.note = "word count differs from the expectation";
        checks.push_back(std::move(r));
    }
    if (!a.bound_check.empty()) {
        std::istringstream is(a.bound_check);
        int n = 0, q = 0, k = 0;
        char c1 = 0, c2 = 0;
        if (!(is >> n >> c1 >> q >> c2 >> k) || c1 != ',' || c2 != ',')
            throw anticode::invalid_params("--bound-check expects n,q,k");
        const anticode::SpaceParams space(n, q, k);
        const Bigint partner = parse_bigint(a.partner_size);
        const auto bc = anticode::code_anticode_bound(Bigint(c.size()), partner, space);
        anticode::VerificationReport r;
        r.property = "code-anticode-bound";
        r.pass = bc.holds;
        r.note = bc.lhs.str() + " <= " + bc.rhs.str() + " with slack " + bc.slack.str() +
                 (bc.diameter_perfect ? " (diameter perfect)" : "");
        checks.push_back(std::move(r));
        extra["bound"] = {{"holds", bc.holds},
                          {"lhs", bc.lhs.str()},
                          {"rhs", bc.rhs.str()},
                          {"slack", bc.slack.str()},
                          {"diameter_perfect", bc.diameter_perfect}};
    }
    if (checks.empty()) {
        // Nothing asserted: report the measured invariants instead.
        try {
            extra["diameter"] = anticode::diameter(c, cfg);
            if (c.size() >= 2) extra["min_distance"] = anticode::min_distance(c, cfg);
        } catch (const anticode::resource_limit& e) {
            extra["note"] = std::string("scan refused: ") + e.what();
        }
    }
    bool pass = true;
    ordered_json jchecks = ordered_json::array();
    for (const auto& r : checks) {
        pass = pass && r.pass;
        jchecks.push_back(check_json(r));
    }
    ordered_json results{{"size", c.size()},
                         {"constant_weight", c.constant_weight()},
                         {"pass", pass}};
    if (!jchecks.empty()) results["checks"] = std::move(jchecks);
    for (auto& [key, value] : extra.items()) results[key] = value;
    ordered_json params{{"n", c.params().n}, {"q", c.params().q}};
    if (c.constant_weight()) params["k"] = c.params().k;
    emit("verify", params, results, {{"seconds", timer.seconds()}});
    return pass ? kExitPass : kExitFail;
}

struct SearchArgs {
    std::string problem;
    int n = 0, q = 0;
    std::optional<int> k, D, t;
    bool census = false;
    std::uint64_t budget_nodes = anticode::SearchBudget{}.max_nodes;
    double budget_secs = anticode::SearchBudget{}.max_seconds;
    std::string witness_out;
};

int run_search(const SearchArgs& a, const GlobalArgs&) {
    anticode::SearchBudget budget;
    budget.max_nodes = a.budget_nodes;
    budget.max_seconds = a.budget_secs;
    const auto mode =
        a.census ? anticode::SearchMode::census : anticode::SearchMode::one_optimum;
    anticode::SearchReport rep;
    ordered_json params{{"problem", a.problem}, {"n", a.n}, {"q", a.q}};
    if (a.problem == "anticode") {
        if (!a.D || a.t) throw anticode::invalid_params("anticode search takes --D (not --t)");
        if (!a.k) throw anticode::invalid_params("anticode search needs --k");
        rep = anticode::max_anticode(anticode::SpaceParams(a.n, a.q, *a.k), *a.D, mode, budget);
        params["k"] = *a.k;
        params["D"] = *a.D;
    } else if (a.problem == "family") {
        if (!a.t || a.D) throw anticode::invalid_params("family search takes --t (not --D)");
        if (!a.k) throw anticode::invalid_params("family search needs --k");
        rep = anticode::max_intersecting_family(anticode::SpaceParams(a.n, a.q, *a.k), *a.t,
                                                mode, budget);
        params["k"] = *a.k;
        params["t"] = *a.t;
    } else {
        if (!a.D || a.t)
            throw anticode::invalid_params("unrestricted search takes --D (not --t)");
        if (a.k) throw anticode::invalid_params("unrestricted search has no --k");
        rep = anticode::max_anticode_unrestricted(a.n, a.q, *a.D, mode, budget);
        params["D"] = *a.D;
    }
    params["census"] = a.census;
    ordered_json results{{"problem", rep.problem},
                         {"mode", a.census ? "census" : "one-optimum"},
                         {"universe_size", rep.universe_size},
                         {"optimum", rep.optimum},
                         {"proved_optimal", rep.proved_optimal},
                         {"nodes", rep.nodes},
                         {"symmetry", rep.symmetry}};
    if (rep.census_count) results["census_count"] = *rep.census_count;
    if (rep.witness) {
        results["witness_size"] = rep.witness->size();
        results["witness_text"] = words_text(*rep.witness);
        if (!a.witness_out.empty()) anticode::write_words_file(a.witness_out, *rep.witness);
    }
    if (!rep.proved_optimal) results["note"] = "budget reached; values are best-found only";
    emit("search", params, results, {{"seconds", rep.seconds}});
    return rep.proved_optimal ? kExitPass : kExitBudget;
}

struct EquivArgs {
    std::string file1, file2;
    std::optional<int> q, k;
    bool global_symbols = false;
    std::uint64_t max_nodes = anticode::CanonConfig{}.max_nodes;
};

anticode::CanonConfig canon_cfg(bool global_symbols, std::uint64_t max_nodes) {
    anticode::CanonConfig cfg;
    cfg.mode = global_symbols ? anticode::SymbolMode::global
                              : anticode::SymbolMode::per_coordinate;
    cfg.max_nodes = max_nodes;
    return cfg;
}

int run_equiv(const EquivArgs& a, const GlobalArgs&) {
    Timer timer;
    const auto c1 = anticode::read_words_file(a.file1, a.q, a.k);
    const auto c2 = anticode::read_words_file(a.file2, a.q, a.k);
    const auto res = anticode::are_equivalent(c1, c2, canon_cfg(a.global_symbols, a.max_nodes));
    ordered_json results{{"equivalent", res.equivalent}};
    results["witness"] = res.witness ? map_json(*res.witness) : ordered_json(nullptr);
    emit("equiv",
         {{"file1", a.file1},
          {"file2", a.file2},
          {"symbol_mode", a.global_symbols ? "global" : "per-coordinate"}},
         results, {{"seconds", timer.seconds()}});
    return kExitPass;
}

struct CanonArgs {
    std::string file;
    std::optional<int> q, k;
    bool global_symbols = false;
    std::uint64_t max_nodes = anticode::CanonConfig{}.max_nodes;
};

int run_canon(const CanonArgs& a, const GlobalArgs& g) {
    Timer timer;
    const auto c = anticode::read_words_file(a.file, a.q, a.k);
    const auto hex = anticode::canonical_hex(c, canon_cfg(a.global_symbols, a.max_nodes));
    if (g.format == "json") {
        emit("canon",
             {{"file", a.file},
              {"symbol_mode", a.global_symbols ? "global" : "per-coordinate"}},
             {{"hex", hex}}, {{"seconds", timer.seconds()}});
    } else {
        std::cout << hex << "\n";
    }
    return kExitPass;
}

struct HierarchyArgs {
    int q = 0, n = 0, k = 0, D = 0;
    bool table = false;
    std::string q_range, n_range;
};

ordered_json entry_json(const anticode::HierarchyEntry& e) {
    return {{"t", e.params.t},
            {"eps", e.params.eps},
            {"size", e.size.str()},
            {"diameter", e.diameter},
            {"diameter_formula_applies", e.diameter_formula_applies},
            {"is_largest", e.is_largest}};
}

int run_hierarchy(const HierarchyArgs& a, const GlobalArgs& g) {
    Timer timer;
    const std::string format = g.format.empty() ? "json" : g.format;
    if (!a.table) {
        const auto seq = anticode::hierarchy_sequence(a.q, a.n, a.k, a.D);
        if (format == "csv") {
            std::cout << "t,eps,size,diameter,diameter_formula_applies,is_largest\n";
            for (const auto& e : seq)
                std::cout << e.params.t << ',' << e.params.eps << ',' << e.size.str() << ','
                          << e.diameter << ',' << e.diameter_formula_applies << ','
                          << e.is_largest << "\n";
        } else {
            ordered_json entries = ordered_json::array();
            for (const auto& e : seq) entries.push_back(entry_json(e));
            emit("hierarchy", {{"q", a.q}, {"n", a.n}, {"k", a.k}, {"D", a.D}},
                 {{"entries", std::move(entries)}, {"count", seq.size()}},
                 {{"seconds", timer.seconds()}});
        }
        return kExitPass;
    }
    const auto [q_lo, q_hi] = parse_range(a.q_range.empty() ? std::to_string(a.q) : a.q_range);
    const auto [n_lo, n_hi] = parse_range(a.n_range.empty() ? std::to_string(a.n) : a.n_range);
    const auto table = anticode::crossover_table(q_lo, q_hi, n_lo, n_hi, a.k, a.D);
    if (format == "csv") {
        std::cout << "q,n,best_t,best_eps,best_size,tie,thresholds_consistent\n";
        for (const auto& cell : table.cells) {
            std::cout << cell.q << ',' << cell.n << ',';
            if (cell.has_entries)
                std::cout << cell.best_t << ',' << cell.best_eps << ',' << cell.best_size.str();
            else
                std::cout << ",,";
            std::cout << ',' << cell.tie << ',' << cell.thresholds_consistent << "\n";
        }
    } else {
        ordered_json cells = ordered_json::array();
        for (const auto& cell : table.cells) {
            ordered_json j{{"q", cell.q}, {"n", cell.n}, {"has_entries", cell.has_entries}};
            if (cell.has_entries) {
                j["best_t"] = cell.best_t;
                j["best_eps"] = cell.best_eps;
                j["best_size"] = cell.best_size.str();
                j["tie"] = cell.tie;
            }
            j["thresholds_consistent"] = cell.thresholds_consistent;
            cells.push_back(std::move(j));
        }
        emit("hierarchy",
             {{"k", a.k},
              {"D", a.D},
              {"q_range", std::to_string(q_lo) + ":" + std::to_string(q_hi)},
              {"n_range", std::to_string(n_lo) + ":" + std::to_string(n_hi)}},
             {{"cells", std::move(cells)}}, {{"seconds", timer.seconds()}});
    }
    return kExitPass;
}

struct BoundArgs {
    std::string code_size, anticode_size;
    int n = 0, q = 0, k = 0;
};

int run_bound(const BoundArgs& a, const GlobalArgs&) {
    Timer timer;
    const auto bc = anticode::code_anticode_bound(parse_bigint(a.code_size),
                                                  parse_bigint(a.anticode_size),
                                                  anticode::SpaceParams(a.n, a.q, a.k));
    emit("bound",
         {{"code_size", a.code_size},
          {"anticode_size", a.anticode_size},
          {"n", a.n},
          {"q", a.q},
          {"k", a.k}},
         {{"holds", bc.holds},
          {"lhs", bc.lhs.str()},
          {"rhs", bc.rhs.str()},
          {"slack", bc.slack.str()},
          {"diameter_perfect", bc.diameter_perfect}},
         {{"seconds", timer.seconds()}});
    return bc.holds ? kExitPass : kExitFail;
}

struct ReproduceArgs {
    std::string suite;
    std::string manifest;
};

int run_reproduce(const ReproduceArgs& a, const GlobalArgs& g) {
    anticode::SuiteOptions opts;
    opts.workers = g.workers;
    if (g.budget_pairs) opts.pair_budget = g.budget_pairs;
    if (g.seed_set) opts.seed = g.seed;
    const auto report = anticode::run_suite(a.suite, a.manifest, opts);
    if (g.format == "json") {
        ordered_json criteria = ordered_json::array();
        ordered_json times = ordered_json::array();
        double total = 0;
        for (const auto& c : report.criteria) {
            criteria.push_back(
                {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            times.push_back({{"name", c.name}, {"seconds", c.seconds}});
            total += c.seconds;
        }
        emit("reproduce", {{"suite", report.suite}},
             {{"criteria", std::move(criteria)}, {"all_pass", report.all_pass}},
             {{"seconds", total}, {"criteria", std::move(times)}});
    } else {
        int failed = 0;
        for (const auto& c : report.criteria) {
            failed += c.pass ? 0 : 1;
            std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
                      << "): " << c.detail << " [" << std::fixed << std::setprecision(2)
                      << c.seconds << "s]\n";
        }
        if (failed == 0)
            std::cout << "all " << report.criteria.size() << " criteria passed\n";
        else
            std::cout << failed << " of " << report.criteria.size() << " criteria failed\n";
    }
    return report.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-weight anticode and intersecting-family toolkit"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--workers", g.workers, "worker threads (0 = all available)");
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for randomized reproduction runs");
    app.add_option("--budget-pairs", g.budget_pairs,
                   "symbol-comparison budget for pairwise scans");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a structured family");
    construct->fallthrough();
    construct->add_option("--family", ca.family, "F | A | A-eps | zero-prefix")->required();
    construct->add_option("--q", ca.q)->required();
    construct->add_option("--n", ca.n)->required();
    construct->add_option("--k", ca.k)->required();
    construct->add_option("--t", ca.t)->required();
    construct->add_option("--eps", ca.eps);
    construct->add_option("--out", ca.out, "write words to this file");
    construct->add_flag("--json", ca.json, "emit the JSON sidecar instead of words");
    construct->add_option("--max-words", ca.max_words);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check properties of a word list");
    verify->fallthrough();
    verify->add_option("--in", va.in, "input file (default: stdin)");
    verify->add_option("--q", va.q, "alphabet size when the input has no header");
    verify->add_option("--k", va.k, "constant weight when the input has no header");
    verify->add_option("--t", va.t, "assert pairwise nonzero agreement >= t");
    verify->add_option("--expect-diameter", va.expect_diameter);
    verify->add_option("--expect-size", va.expect_size);
    verify->add_option("--bound-check", va.bound_check,
                       "n,q,k space for the size-product bound");
    verify->add_option("--partner-size", va.partner_size,
                       "partner set size for --bound-check (default 1)");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exact maximum-set search");
    search->fallthrough();
    search->add_option("problem", sa.problem, "anticode | family | unrestricted")
        ->required()
        ->check(CLI::IsMember({"anticode", "family", "unrestricted"}));
    search->add_option("--n", sa.n)->required();
    search->add_option("--q", sa.q)->required();
    search->add_option("--k", sa.k);
    search->add_option("--D", sa.D, "diameter bound (anticode, unrestricted)");
    search->add_option("--t", sa.t, "agreement threshold (family)");
    search->add_flag("--census", sa.census, "collect every optimum, not just one");
    search->add_option("--budget-nodes", sa.budget_nodes);
    search->add_option("--budget-secs", sa.budget_secs);
    search->add_option("--witness-out", sa.witness_out, "write one optimum to this file");

    EquivArgs ea;
    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two word lists");
    equiv->fallthrough();
    equiv->add_option("file1", ea.file1)->required();
    equiv->add_option("file2", ea.file2)->required();
    equiv->add_option("--q", ea.q, "alphabet size when inputs have no header");
    equiv->add_option("--k", ea.k, "constant weight when inputs have no header");
    equiv->add_flag("--global-symbols", ea.global_symbols,
                    "one shared symbol permutation instead of per-coordinate");
    equiv->add_option("--max-nodes", ea.max_nodes);

    CanonArgs na;
    auto* canon = app.add_subcommand("canon", "canonical form of a word list");
    canon->fallthrough();
    canon->add_option("file", na.file)->required();
    canon->add_option("--q", na.q, "alphabet size when the input has no header");
    canon->add_option("--k", na.k, "constant weight when the input has no header");
    canon->add_flag("--global-symbols", na.global_symbols);
    canon->add_option("--max-nodes", na.max_nodes);

    HierarchyArgs ha;
    auto* hierarchy = app.add_subcommand("hierarchy", "fixed-diameter ladder and crossovers");
    hierarchy->fallthrough();
    hierarchy->add_option("--q", ha.q)->required();
    hierarchy->add_option("--n", ha.n)->required();
    hierarchy->add_option("--k", ha.k)->required();
    hierarchy->add_option("--D", ha.D)->required();
    hierarchy->add_flag("--table", ha.table, "argmax over a (q, n) grid");
    hierarchy->add_option("--q-range", ha.q_range, "a:b (with --table)");
    hierarchy->add_option("--n-range", ha.n_range, "a:b (with --table)");

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "evaluate the size-product bound");
    bound->fallthrough();
    bound->add_option("--code-size", ba.code_size)->required();
    bound->add_option("--anticode-size", ba.anticode_size)->required();
    bound->add_option("--n", ba.n)->required();
    bound->add_option("--q", ba.q)->required();
    bound->add_option("--k", ba.k)->required();

    ReproduceArgs ra;
    auto* reproduce = app.add_subcommand("reproduce", "run an acceptance suite");
    reproduce->fallthrough();
    reproduce->add_option("suite", ra.suite, "suite name or 'all'")->required();
    reproduce->add_option("--manifest", ra.manifest, "grid manifest path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }
    g.seed_set = seed_opt->count() > 0;
#ifdef _OPENMP
    if (g.workers > 0) omp_set_num_threads(g.workers);
#endif

    try {
        if (construct->parsed()) return run_construct(ca, g);
        if (verify->parsed()) return run_verify(va, g);
        if (search->parsed()) return run_search(sa, g);
        if (equiv->parsed()) return run_equiv(ea, g);
        if (canon->parsed()) return run_canon(na, g);
        if (hierarchy->parsed()) return run_hierarchy(ha, g);
        if (bound->parsed()) return run_bound(ba, g);
        if (reproduce->parsed()) return run_reproduce(ra, g);
    } catch (const anticode::resource_limit& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
