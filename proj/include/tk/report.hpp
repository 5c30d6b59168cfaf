// report.hpp -- the outcome record of one verification suite run

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tk {

/// Cap on recorded violation payloads per report.
inline constexpr std::size_t kMaxViolations = 100;

struct Violation {
    std::string instance;  // offending instance(s) in the single-line text form
    std::string expected;
    std::string observed;

    bool operator==(const Violation&) const = default;
};

struct Report {
    std::string suite;
    std::map<std::string, std::string> params;
    std::int64_t instances_checked = 0;
    std::vector<Violation> violations;  // capped at kMaxViolations
    std::int64_t runtime_ms = 0;
    bool deterministic = true;

    bool passed() const { return violations.empty(); }

    void add_violation(std::string instance, std::string expected,
                       std::string observed) {
        if (violations.size() < kMaxViolations)
            violations.push_back({std::move(instance), std::move(expected),
                                  std::move(observed)});
        else
            ++overflow_count;
    }

    /// Violations beyond the cap (counted, not stored).
    std::int64_t overflow_count = 0;
};

}  // namespace tk
