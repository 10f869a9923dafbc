// verify.hpp — end-to-end self checks: analytic oracles against the matrix
// engine, first-order error scaling, and full-basis vs collective-sector
// equivalence. Backs the `verify` CLI subcommand.

#pragma once

#include <string>
#include <vector>

namespace spinfloq {

struct VerificationCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

VerificationReport run_verification();

}  // namespace spinfloq
