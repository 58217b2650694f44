#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wigner::verify {

struct CheckResult {
    std::string name;
    bool passed;
    double residual;
    double tolerance;
};

// Invariant suite of the phase-space layer on the built-in catalogue; randomised parts use seed.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed);

}  // namespace wigner::verify
