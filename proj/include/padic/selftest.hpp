#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace padic {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured quantity vs. the pinned tolerance
    double seconds = 0.0;
};

// The 16 acceptance checks, in order. Deterministic for a fixed seed.
std::vector<CheckResult> run_acceptance(std::uint64_t seed = 20250823);

}  // namespace padic
