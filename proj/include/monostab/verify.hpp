#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monostab/report.hpp"

namespace monostab {

// Replays the known results for the H(b) family and for the two-parameter
// construction make_composite(a, b): computed values against the closed
// forms, and detected stability indices against the known pairs.
struct VerifyConfig {
    std::vector<std::uint32_t> h_values{1, 2, 3};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> composite_pairs{{2, 1}, {2, 2}, {2, 3},
                                                                      {3, 1}, {3, 2}, {3, 3}};
    std::size_t window = 2;
    // Overrides default_horizon(a, b) when set.
    std::optional<std::size_t> k_max;
    ProfileOptions profile{};
};

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct FamilyResult {
    std::string family;  // "H" or "composite"
    std::uint32_t a = 1;
    std::uint32_t b = 1;
    std::size_t horizon = 0;
    std::vector<Check> checks;
    std::optional<std::string> capacity_error;
    report::Json profile;  // empty when the profile could not be built
    report::Json inequalities;
    bool passed() const;
};

struct VerifyReport {
    std::vector<FamilyResult> families;
    bool passed() const;
    bool capacity_exceeded() const;
    report::Json to_json() const;
    std::string to_table() const;
};

FamilyResult verify_H(std::uint32_t b, const VerifyConfig& config);
FamilyResult verify_composite(std::uint32_t a, std::uint32_t b, const VerifyConfig& config);
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace monostab
