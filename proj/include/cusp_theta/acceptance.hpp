#pragma once

#include <span>
#include <string>
#include <vector>

namespace cusp_theta {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int acceptance_count = 12;

// Runs one acceptance criterion (1..12) with its pinned tolerances. Exceptions are
// caught and reported as a failing result.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(std::span<const int> ids);

// "[PASS] 7 V formula vs series (12.3 s): ..." on one line
std::string format_result(const CriterionResult& r);

}  // namespace cusp_theta
