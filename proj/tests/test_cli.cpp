#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "anticode/constructions.hpp"
#include "anticode/equivalence.hpp"
#include "anticode/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
using namespace anticode;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

std::string temp_path(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    return (dir / ("anticode_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
                   std::to_string(counter++)))
        .string();
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(ANTICODE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string tmp;
    if (!stdin_text.empty()) {
        tmp = temp_path("stdin");
        std::ofstream(tmp) << stdin_text;
        cmd += " < " + tmp;
    } else {
        cmd += " < /dev/null";
    }
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = ::pclose(pipe);
    if (!tmp.empty()) std::remove(tmp.c_str());
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("construct writes the words as text") {
    auto r = run_cli("construct --family F --q 3 --n 4 --k 2 --t 1");
    CHECK(r.status == 0);
    REQUIRE(count_lines(r.out) == 7);  // header plus six words
    CHECK(r.out.substr(0, r.out.find('\n')) == "# n=4 q=3 k=2");
    std::istringstream in(r.out);
    auto c = read_words(in);
    CHECK(c.size() == 6);
    CHECK(is_t_intersecting(c, 1).pass);
}

TEST_CASE("construct --json reports the formula and the measured diameter") {
    auto r = run_cli("construct --family F --q 3 --n 4 --k 2 --t 1 --json");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j.contains("timing"));
    j.erase("timing");
    const auto expected = json::parse(R"({
        "command": "construct",
        "params": {"family": "F", "q": 3, "n": 4, "k": 2, "t": 1, "eps": 0},
        "results": {"family": "F", "size": 6, "formula_size": "6", "measured_diameter": 2}
    })");
    CHECK(j == expected);
}

TEST_CASE("construct --out writes a loadable file") {
    const std::string path = temp_path("family");
    auto r = run_cli("construct --family A-eps --q 4 --n 5 --k 2 --t 1 --eps 1 --out " + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());  // words went to the file, confirmation to stderr
    auto c = read_words_file(path);
    CHECK(c.size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("verify accepts its own construction on stdin") {
    auto words = run_cli("construct --family F --q 3 --n 5 --k 2 --t 1");
    REQUIRE(words.status == 0);
    auto r = run_cli("verify --t 1 --expect-diameter 2 --expect-size 8", words.out);
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["results"]["pass"] == true);
    CHECK(j["results"]["size"] == 8);
    CHECK(j["params"]["n"] == 5);

    auto wrong = run_cli("verify --t 1 --expect-diameter 3", words.out);
    CHECK(wrong.status == 1);
    auto jw = json::parse(wrong.out);
    CHECK(jw["results"]["pass"] == false);
}

TEST_CASE("verify with no assertions reports measured invariants") {
    auto words = run_cli("construct --family F --q 3 --n 4 --k 2 --t 1");
    auto r = run_cli("verify", words.out);
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["results"]["diameter"] == 2);
    CHECK(j["results"]["min_distance"] == 1);
}

TEST_CASE("verify evaluates the size-product bound against a space") {
    auto words = run_cli("construct --family A-eps --q 3 --n 4 --k 2 --t 1 --eps 1");
    auto r = run_cli("verify --bound-check 4,3,2 --partner-size 12", words.out);
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["results"]["bound"]["holds"] == true);
    CHECK(j["results"]["bound"]["slack"] == "0");
    CHECK(j["results"]["bound"]["diameter_perfect"] == true);
}

TEST_CASE("search reports the proven optimum") {
    auto r = run_cli("search anticode --n 7 --q 3 --k 2 --D 2");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["results"]["optimum"] == 12);
    CHECK(j["results"]["proved_optimal"] == true);
    CHECK(j["results"]["universe_size"] == 84);
    CHECK(j["results"]["witness_size"] == 12);
}

TEST_CASE("search census writes the witness file") {
    const std::string path = temp_path("witness");
    auto r = run_cli("search family --n 7 --q 3 --k 2 --t 1 --census --witness-out " + path);
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["results"]["census_count"] == 14);
    auto w = read_words_file(path);
    CHECK(w.size() == 12);
    CHECK(is_t_intersecting(w, 1).pass);
    std::remove(path.c_str());
}

TEST_CASE("search exits 3 when the budget stops it") {
    auto r = run_cli("search anticode --n 7 --q 3 --k 2 --D 2 --budget-nodes 1");
    CHECK(r.status == 3);
    auto j = json::parse(r.out);
    CHECK(j["results"]["proved_optimal"] == false);
    CHECK(j["results"].contains("note"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("construct --family F --q 3 --n 4 --k 2 --t 1 --nope").status == 2);
    CHECK(run_cli("search family --n 4 --q 3 --k 2").status == 2);     // missing --t
    CHECK(run_cli("search anticode --n 4 --q 3 --D 2").status == 2);   // missing --k
    CHECK(run_cli("search unrestricted --n 4 --q 3 --D 2 --k 2").status == 2);
    CHECK(run_cli("construct --family nope --q 3 --n 4 --k 2 --t 1").status == 2);
    CHECK(run_cli("reproduce no-such-suite").status == 2);
    CHECK(run_cli("").status == 2);  // a subcommand is required
}

TEST_CASE("hierarchy emits the ladder as json and csv") {
    auto r = run_cli("hierarchy --q 3 --n 12 --k 3 --D 4");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["results"]["count"] == 2);
    CHECK(j["results"]["entries"][0]["t"] == 1);
    CHECK(j["results"]["entries"][0]["size"] == "220");
    CHECK(j["results"]["entries"][0]["is_largest"] == true);
    CHECK(j["results"]["entries"][1]["size"] == "80");

    auto csv = run_cli("hierarchy --q 3 --n 12 --k 3 --D 4 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) ==
          "t,eps,size,diameter,diameter_formula_applies,is_largest");
    CHECK(count_lines(csv.out) == 3);
}

TEST_CASE("hierarchy --table sweeps the requested ranges") {
    auto r = run_cli("hierarchy --table --q-range 3:4 --n-range 8:9 --q 3 --n 8 --k 4 --D 4");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["results"]["cells"].size() == 4);
    for (const auto& cell : j["results"]["cells"]) {
        CHECK(cell["has_entries"] == true);
        CHECK(cell["thresholds_consistent"] == true);
    }
}

TEST_CASE("bound exit code distinguishes holding from violated") {
    auto ok = run_cli("bound --code-size 12 --anticode-size 2 --n 4 --q 3 --k 2");
    CHECK(ok.status == 0);
    auto j = json::parse(ok.out);
    CHECK(j["results"]["slack"] == "0");
    CHECK(j["results"]["diameter_perfect"] == true);

    auto bad = run_cli("bound --code-size 25 --anticode-size 1 --n 4 --q 3 --k 2");
    CHECK(bad.status == 1);
    auto jb = json::parse(bad.out);
    CHECK(jb["results"]["holds"] == false);
}

TEST_CASE("canon prints the canonical hex and equiv matches it") {
    const std::string f1 = temp_path("c1");
    const std::string f2 = temp_path("c2");
    auto c = construct_F(FamilyParams(3, 5, 2, 1, 0));
    write_words_file(f1, c);
    EquivalenceMap m = EquivalenceMap::identity(5, 3);
    m.coord_perm = {4, 2, 0, 1, 3};
    m.symbol_perms[2] = {0, 2, 1};
    write_words_file(f2, apply(m, c));

    auto hex = run_cli("canon " + f1);
    CHECK(hex.status == 0);
    CHECK(hex.out == canonical_hex(c) + "\n");
    auto hex2 = run_cli("canon " + f2);
    CHECK(hex2.out == hex.out);  // same class, same bytes

    auto eq = run_cli("equiv " + f1 + " " + f2);
    CHECK(eq.status == 0);
    auto j = json::parse(eq.out);
    CHECK(j["results"]["equivalent"] == true);
    REQUIRE(j["results"]["witness"].is_object());
    CHECK(j["results"]["witness"]["coord_perm"].size() == 5);

    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("identical invocations produce identical reports") {
    for (const std::string& args :
         {std::string("construct --family A-eps --q 4 --n 6 --k 3 --t 1 --eps 1 --json"),
          std::string("search anticode --n 6 --q 3 --k 2 --D 2 --census"),
          std::string("hierarchy --q 5 --n 10 --k 4 --D 4")}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        REQUIRE(a.status == 0);
        REQUIRE(b.status == 0);
        auto ja = json::parse(a.out);
        auto jb = json::parse(b.out);
        ja.erase("timing");
        jb.erase("timing");
        CHECK(ja == jb);
    }
}
