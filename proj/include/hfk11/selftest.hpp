#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hfk {

struct CheckResult {
    bool pass = false;
    std::string expected;
    std::string actual;
    double seconds = 0.0;
};

struct Check {
    int criterion = 0;
    std::string name;
    std::function<CheckResult()> run;
};

/// The acceptance checklist. Each entry pins one numbered criterion with its
/// exact expected values; cmd_selftest and the acceptance test binary both
/// run these.
const std::vector<Check>& acceptance_checks();

CheckResult run_check(const Check& c);

}  // namespace hfk
