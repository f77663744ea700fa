#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace sturmia {

inline constexpr std::uint64_t kAcceptanceSeed = 0x5eed2014;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = kAcceptanceSeed;
    std::set<int> only;  // empty runs all
};

// Runs the numbered criteria; diagnostics go to `log`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log);

// "PASS [ 5] title: detail"
std::string format_result(const CriterionResult& r);

}  // namespace sturmia
