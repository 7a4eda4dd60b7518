#include <cstdio>
#include <exception>

#include "fastmix/verification.hpp"

// Runs the eleven acceptance suites and prints one PASS/FAIL line each.
int main() {
    std::vector<fastmix::verification::SuiteReport> suites;
    try {
        suites = fastmix::verification::acceptance_suites(0);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 1;
    }

    bool all_passed = true;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        const auto& suite = suites[i];
        if (suite.passed()) {
            std::printf("criterion %zu [%s]: PASS\n", i + 1, suite.suite.c_str());
            continue;
        }
        all_passed = false;
        const fastmix::verification::CheckResult* first_failed = nullptr;
        for (const auto& check : suite.checks)
            if (!check.passed) {
                first_failed = &check;
                break;
            }
        if (first_failed)
            std::printf("criterion %zu [%s]: FAIL — %s: %s\n", i + 1, suite.suite.c_str(),
                        first_failed->name.c_str(), first_failed->detail.c_str());
        else
            std::printf("criterion %zu [%s]: FAIL — no checks ran\n", i + 1,
                        suite.suite.c_str());
    }
    return all_passed ? 0 : 1;
}
