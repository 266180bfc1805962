#pragma once

#include <functional>
#include <string>
#include <vector>

namespace g3 {

// One verification check of the release gate.  `skipped` marks a slow check
// that was not requested; it does not count as a failure.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    // Run the slow feasibility-example check as well (several minutes of
    // Hamiltonian searches on a 28-vertex graph).
    bool include_slow = false;
    int jobs = 1;
    // Directory for the tail-campaign checkpoint files; empty disables
    // checkpointing.
    std::string checkpoint_dir;
    // Run only these check ids; empty means all.
    std::vector<int> only;
    // Called after each check completes, for streaming progress output.
    std::function<void(const CheckResult&)> on_result;
};

// Runs the whole release gate: the four enumeration campaigns, the sharpness
// example, the preimage round trip, the closure, local-structure and
// Hamiltonian-oracle property suites.  Exceptions inside a check are caught
// and reported as failures of that check.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {});

// True when every non-skipped check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace g3
