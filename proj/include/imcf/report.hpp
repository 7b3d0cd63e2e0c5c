#pragma once

#include <string>
#include <vector>

namespace imcf {

enum class CheckStatus { Pass, Fail, Skip };

// One verified statement: the measured residual, the tolerance it was held to,
// and where (time / node / refinement level) the worst case occurred.
struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string location; // e.g. "t=1.2500", "theta=0.7854", "level=3"
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    void merge(const CheckReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::Fail) return false;
        return true;
    }
};

const char* to_string(CheckStatus s);

} // namespace imcf
