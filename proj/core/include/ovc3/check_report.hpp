#pragma once

#include <string>
#include <vector>

namespace ovc3 {

// One named identity check: what was tested, whether it held, and a short
// factual detail (truncation, sampled parameters, first failing index).
struct CheckResult {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
    }
};

} // namespace ovc3
