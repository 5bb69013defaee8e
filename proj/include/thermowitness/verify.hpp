#pragma once

#include <string>
#include <vector>

namespace thermowitness::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; ///< worst observed deviation vs. the allowed one
};

/// Full desk-scale verification suite: special-function identities,
/// discretization convergence, separable-bound sampling, witness gap
/// scaling, crossing-vs-closed-form agreement, and SIMD kernel
/// equivalence. Deterministic.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace thermowitness::verify
