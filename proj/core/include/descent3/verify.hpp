#pragma once

#include <string>
#include <vector>

namespace descent3 {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::vector<int> primes{2, 3};
    int order_cap = 243;
    int jobs = 1;
};

// The ten acceptance checks, in order. Every tolerance is exact (the claims
// are algebraic identities); "pass" means every sub-check held.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace descent3
