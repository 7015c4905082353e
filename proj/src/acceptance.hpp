#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rtm {

struct CriterionResult {
    int number = 0;
    std::string label;
    bool passed = false;
    std::string detail;   // first failure, or a summary statistic
    double seconds = 0.0;
};

// The twelve acceptance suites. seed fixes every randomized sample.
CriterionResult run_criterion(int number, std::uint64_t seed = 1);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = 1);
std::string criterion_label(int number);

} // namespace rtm
