#pragma once

#include <string>
#include <vector>

namespace bno {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 8;   // depth of the exhaustive cross-route checks
    int order = 10;  // truncation order for the generating-function checks
    long long guard = 100'000'000;
    // Negative control: corrupts one expected value so the suite must fail.
    bool inject_fault = false;
};

// Runs every cross-route identity check; results are in a fixed order
// independent of execution strategy.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace bno
