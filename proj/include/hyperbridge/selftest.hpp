#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperbridge {

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

struct SelftestSummary {
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool ok() const {
        for (const auto& s : suites) {
            if (s.failed != 0) {
                return false;
            }
        }
        return true;
    }
};

/// Randomized property suites: SL(2) and axis-permutation invariance of the
/// quartic invariants, delta == 0 versus repeated roots, the bridge round
/// trip, and the group law on y^2 = x^3 - 25x. Deterministic in `seed`.
/// `inject_fault` perturbs one comparison so the run must fail.
SelftestSummary run_selftest(std::uint64_t iterations, std::uint64_t seed, bool inject_fault = false);

}  // namespace hyperbridge
