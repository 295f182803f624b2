#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sofa {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double value = 0.0;     // the measured error or quantity
    double tolerance = 0.0; // bound it is compared against
    double seconds = 0.0;
    std::string detail;
};

struct SuiteConfig {
    bool full = false; // full: resolutions of the acceptance table; fast: n <= 500
    std::uint64_t seed = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_json() const;
    std::string summary_line(const CheckResult &c) const;
};

// Acceptance checks 1 to 13.
CheckResult run_check(int id, const SuiteConfig &cfg);
SuiteReport run_suite(const std::string &suite, std::uint64_t seed = 0);
constexpr int kCheckCount = 13;

} // namespace sofa
