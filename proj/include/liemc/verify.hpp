#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liemc {

struct CheckResult {
    std::string name;      // stable machine identifier, e.g. "bch.associativity"
    std::string anchor;    // the law being checked, human-readable
    bool pass = false;
    std::string residual;  // "0" when exact, else a short rendering of the defect
};

struct VerifyOptions {
    uint64_t seed = 12345;
    int truncation = 4;  // ambient order for the randomized suites
    int trials = 20;     // draws per randomized law
};

// Runs every identity suite: BCH group laws, linearization, gauge laws,
// interval and circuit structure, homology and solver certificates, the
// invariant Maurer-Cartan pipeline, triangle models, a corrupted-model
// negative control, and serialization round-trips. Deterministic given the
// seed. Every equality is exact mod truncation; residuals are reported.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace liemc
