#include <cstdio>

#include "padic/selftest.hpp"

// Prints one line per acceptance criterion and exits nonzero if any failed.
int main() {
    int failures = 0;
    int idx = 0;
    for (const padic::CheckResult& r : padic::run_acceptance()) {
        ++idx;
        std::printf("%-4s %2d %-26s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        failures += !r.pass;
    }
    if (failures) std::printf("%d of %d criteria failed\n", failures, idx);
    return failures ? 1 : 0;
}
