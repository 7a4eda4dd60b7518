#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fastmix::verification {

// One named inequality or construction, aggregated over its instance corpus.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// Property suites over seeded corpora. Each is deterministic in its seed.
SuiteReport suite_sandwich(std::uint64_t seed);
SuiteReport suite_directed_matching(std::uint64_t seed);
SuiteReport suite_sweep(std::uint64_t seed);
SuiteReport suite_easy_side();
SuiteReport suite_almost_mixing();
SuiteReport suite_continuous_time();
SuiteReport suite_perfect_mixing(std::uint64_t seed);
SuiteReport suite_canonical_paths(std::uint64_t seed);
SuiteReport suite_eigensolver();
SuiteReport suite_hitting_example();
SuiteReport suite_gap_scaling();
SuiteReport suite_coarea(std::uint64_t seed);
SuiteReport suite_cheeger_rounding(std::uint64_t seed);
SuiteReport suite_embedding_rounding(std::uint64_t seed);
SuiteReport suite_fractional_duality(std::uint64_t seed);
SuiteReport suite_tree_structure(std::uint64_t seed);
SuiteReport suite_conductance_relations(std::uint64_t seed);
// Replays pinned fixture values; a missing or empty directory fails with
// "missing fixtures" in the detail.
SuiteReport suite_goldens(const std::string& fixtures_dir);

// The acceptance gate, in its pinned order.
std::vector<SuiteReport> acceptance_suites(std::uint64_t seed);
// Every suite; goldens included when fixtures_dir is nonempty.
std::vector<SuiteReport> all_suites(std::uint64_t seed, const std::string& fixtures_dir);

}  // namespace fastmix::verification
