#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anticode {

/// Overrides applied on top of the grid manifest.
struct SuiteOptions {
    int workers = 0;  // 0 = library default
    std::optional<std::uint64_t> pair_budget;
    std::optional<std::uint64_t> seed;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

/// The ten reproduction suites, in criterion order, plus "all".
const std::vector<std::string>& suite_names();

/// Manifest bundled with the source tree (set at build time).
std::string default_manifest_path();

/// Runs one named suite (or "all") against the manifest at `manifest_path`
/// (empty = bundled default). Unknown names or unreadable manifests throw
/// invalid_params.
SuiteReport run_suite(const std::string& name, const std::string& manifest_path = "",
                      const SuiteOptions& opts = {});

}  // namespace anticode
